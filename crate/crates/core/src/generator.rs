//! Seeded instance generation. All randomness comes from ChaCha8
//! (`rand_chacha::ChaCha8Rng::seed_from_u64`), so a config reproduces the
//! same graph on every platform.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, VertexId};
use crate::recognizer::ClassMode;

#[derive(Debug, Clone, PartialEq)]
pub struct GenConfig {
    pub seed: u64,
    pub n: usize,
    pub mode: ClassMode,
    /// Inclusive cycle length range for attached cycles. In odd mode only
    /// odd lengths ≥ 3 inside the range are used.
    pub cycle_len: (usize, usize),
    /// Probability of attaching a pendant edge instead of a cycle.
    pub pendant_prob: f64,
    /// Inclusive range for the number of edges of each planted vertex.
    pub plant_degree: (usize, usize),
}

impl GenConfig {
    pub fn new(seed: u64, n: usize, mode: ClassMode) -> Self {
        GenConfig {
            seed,
            n,
            mode,
            cycle_len: (2, 6),
            pendant_prob: 0.3,
            plant_degree: (3, 6),
        }
    }
}

/// A connected member of the target class on labels `1..=n`, grown by
/// attaching pendant edges and cycles at uniformly chosen vertices.
pub fn gen_class_graph(cfg: &GenConfig) -> Result<MultiGraph> {
    if cfg.n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut g = MultiGraph::new();
    g.insert_vertex(1)?;
    let mut count = 1usize;
    while count < cfg.n {
        let anchor = rng.random_range(1..=count) as VertexId;
        let remaining = cfg.n - count;
        let lengths: Vec<usize> = (cfg.cycle_len.0..=cfg.cycle_len.1)
            .filter(|&l| l - 1 <= remaining)
            .filter(|&l| match cfg.mode {
                ClassMode::Cactus => l >= 2,
                ClassMode::OddCactus => l >= 3 && l % 2 == 1,
            })
            .collect();
        if lengths.is_empty() || rng.random_bool(cfg.pendant_prob) {
            count += 1;
            let v = count as VertexId;
            g.insert_vertex(v)?;
            g.add_edge(anchor, v, 1)?;
            continue;
        }
        let len = lengths[rng.random_range(0..lengths.len())];
        let mut prev = anchor;
        for _ in 1..len {
            count += 1;
            let v = count as VertexId;
            g.insert_vertex(v)?;
            g.add_edge(prev, v, 1)?;
            prev = v;
        }
        g.add_edge(prev, anchor, 1)?;
    }
    Ok(g)
}

/// Adds `r` vertices, each joined by 3–6 (per `cfg.plant_degree`) edges to
/// random base vertices. Removing the returned set gives back `base`.
pub fn plant(
    base: &MultiGraph,
    r: usize,
    cfg: &GenConfig,
) -> Result<(MultiGraph, BTreeSet<VertexId>)> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    let (lo, hi) = cfg.plant_degree;
    if lo > hi {
        return Err(Error::InvalidArgument("empty plant degree range".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(1);
    let targets: Vec<VertexId> = base.vertices().to_vec();
    let mut g = base.clone();
    let mut planted = BTreeSet::new();
    let first = targets.last().map_or(1, |&l| l + 1);
    for v in (first..).take(r) {
        g.insert_vertex(v)?;
        planted.insert(v);
        if targets.is_empty() {
            continue;
        }
        let d = rng.random_range(lo..=hi);
        for _ in 0..d {
            let t = targets[rng.random_range(0..targets.len())];
            let w = match cfg.mode {
                ClassMode::Cactus => 1,
                ClassMode::OddCactus => rng.random_range(0..=1u8),
            };
            g.add_edge(v, t, w)?;
        }
    }
    Ok((g, planted))
}

/// Class graph on `cfg.n` vertices with `r` planted extra vertices.
pub fn planted_instance(cfg: &GenConfig, r: usize) -> Result<(MultiGraph, BTreeSet<VertexId>)> {
    plant(&gen_class_graph(cfg)?, r, cfg)
}

/// `m` edges on labels `1..=n`, each drawn uniformly among the unordered
/// pairs that are still below `max_mult`.
pub fn gen_random_multigraph(
    n: usize,
    m: usize,
    max_mult: usize,
    weighted: bool,
    seed: u64,
) -> Result<MultiGraph> {
    if max_mult == 0 {
        return Err(Error::InvalidArgument("max_mult must be at least 1".into()));
    }
    let pairs: Vec<(VertexId, VertexId)> = (1..=n as VertexId)
        .flat_map(|u| (u + 1..=n as VertexId).map(move |v| (u, v)))
        .collect();
    if m > pairs.len() * max_mult {
        return Err(Error::InvalidArgument(format!(
            "{m} edges do not fit on {n} vertices with multiplicity ≤ {max_mult}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = MultiGraph::from_edges(1..=n as VertexId, [])?;
    let mut used = vec![0usize; pairs.len()];
    let mut open: Vec<usize> = (0..pairs.len()).collect();
    for _ in 0..m {
        let slot = rng.random_range(0..open.len());
        let p = open[slot];
        let w = if weighted {
            rng.random_range(0..=1u8)
        } else {
            1
        };
        g.add_edge(pairs[p].0, pairs[p].1, w)?;
        used[p] += 1;
        if used[p] == max_mult {
            open.swap_remove(slot);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognizer::{class_check, is_cactus_forest, is_odd_cactus_forest};

    #[test]
    fn class_graphs_are_in_class() {
        let g = gen_class_graph(&GenConfig::new(1, 10, ClassMode::Cactus)).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert!(is_cactus_forest(&g).member);
        let h = gen_class_graph(&GenConfig::new(1, 10, ClassMode::OddCactus)).unwrap();
        assert!(is_odd_cactus_forest(&h).member);
        for seed in 0..200 {
            for mode in [ClassMode::Cactus, ClassMode::OddCactus] {
                let g =
                    gen_class_graph(&GenConfig::new(seed, 1 + seed as usize % 40, mode)).unwrap();
                assert!(class_check(&g, mode).member);
                assert_eq!(g.cc(), 1);
            }
        }
    }

    #[test]
    fn deterministic() {
        let cfg = GenConfig::new(77, 25, ClassMode::Cactus);
        assert_eq!(
            gen_class_graph(&cfg).unwrap(),
            gen_class_graph(&cfg).unwrap()
        );
        assert_eq!(
            planted_instance(&cfg, 3).unwrap(),
            planted_instance(&cfg, 3).unwrap()
        );
        assert_eq!(
            gen_random_multigraph(8, 12, 3, true, 5).unwrap(),
            gen_random_multigraph(8, 12, 3, true, 5).unwrap()
        );
    }

    #[test]
    fn planting_is_undone_by_deleting_planted_set() {
        for mode in [ClassMode::Cactus, ClassMode::OddCactus] {
            let cfg = GenConfig::new(9, 20, mode);
            let base = gen_class_graph(&cfg).unwrap();
            let (g, planted) = plant(&base, 3, &cfg).unwrap();
            assert_eq!(planted.len(), 3);
            assert_eq!(g.vertex_count(), 23);
            for &p in &planted {
                let d = g.degree(p).unwrap();
                assert!((3..=6).contains(&d), "degree {d}");
            }
            let back = g.delete_vertices(&planted).unwrap();
            assert_eq!(back, base);
            assert!(class_check(&back, mode).member);
        }
        assert!(plant(
            &MultiGraph::new(),
            0,
            &GenConfig::new(0, 1, ClassMode::Cactus)
        )
        .is_err());
    }

    #[test]
    fn random_multigraph_contract() {
        let g = gen_random_multigraph(5, 0, 1, false, 0).unwrap();
        assert_eq!(g.cc(), 5);
        let d = gen_random_multigraph(2, 3, 3, false, 0).unwrap();
        assert_eq!(d.multiplicity(1, 2).unwrap(), 3);
        assert!(gen_random_multigraph(2, 4, 3, false, 0).is_err());
        assert!(gen_random_multigraph(3, 1, 0, false, 0).is_err());
        for seed in 0..50 {
            let g = gen_random_multigraph(7, 30, 2, true, seed).unwrap();
            assert_eq!(g.edge_count(), 30);
            for e in g.edges() {
                assert_ne!(e.u, e.v);
                assert!(g.multiplicity(e.u, e.v).unwrap() <= 2);
            }
        }
    }
}
