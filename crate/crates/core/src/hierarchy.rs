//! The hierarchical solvers: one-step `tau`, two-step `gamma`, and the
//! generalized multi-level variant.
//!
//! Level 1 solves 2-SCS on the de Bruijn graph of `(r-1)`-mers and cuts the
//! traversal into contigs at added edges. Every further level `j` rebuilds a
//! generalized `(r-j)`-spectrum graph over the previous contigs and repeats.
//! After the last level the plan is expanded into the output superstring, so
//! one level reproduces `tau` and two reproduce `gamma`.

use thiserror::Error;

use crate::euler::{min_euler_completion, EulerError, EulerPlan};
use crate::graph::{
    build_debruijn, build_generalized_spectrum, expand_path, extract_contigs, ContigSet,
    DiMultiGraph, GraphError,
};
use crate::instance::{Algorithm, Instance, SuperstringSolution};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HierarchyError {
    #[error("string length {r} too small, need r >= 3")]
    RTooSmall { r: usize },
    #[error("level count {levels} out of range, need 1..={max}")]
    BadLevelCount { levels: usize, max: usize },
}

/// Observability record for one level of the hierarchy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelRecord {
    /// 1-based level index.
    pub level: usize,
    /// Overlap length used at this level (`r - level`).
    pub k: usize,
    pub node_count: usize,
    pub edge_count: usize,
    pub added_edges: usize,
    pub contig_count: usize,
    /// Original/original adjacencies in this level's plan, i.e. merges of
    /// overlap `k` performed at this level.
    pub junctions: usize,
    /// Total contig length after this level; the final level's value is the
    /// output superstring length.
    pub cumulative_length: usize,
}

/// Per-level records of a hierarchical run. Levels are consecutive and `k`
/// decreases by one per level starting at `r - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HierarchyTrace {
    pub levels: Vec<LevelRecord>,
}

impl HierarchyTrace {
    /// Junctions of overlap `r - 1` (level 1).
    pub fn junctions_r1(&self) -> usize {
        self.levels.first().map_or(0, |l| l.junctions)
    }

    /// Junctions of overlap `r - 2` (level 2), zero for one-level runs.
    pub fn junctions_r2(&self) -> usize {
        self.levels.get(1).map_or(0, |l| l.junctions)
    }
}

fn level_record(
    level: usize,
    k: usize,
    graph: &DiMultiGraph,
    plan: &EulerPlan,
    contigs: &ContigSet,
) -> LevelRecord {
    LevelRecord {
        level,
        k,
        node_count: graph.node_count(),
        edge_count: graph.edge_count(),
        added_edges: plan.added_edges.len(),
        contig_count: contigs.contigs.len(),
        junctions: graph.edge_count() - contigs.contigs.len(),
        cumulative_length: contigs.total_len(),
    }
}

impl From<GraphError> for HierarchyError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::RTooSmall { r } => HierarchyError::RTooSmall { r },
            // Contigs always contain a full instance string, so they are long
            // enough for every k the hierarchy uses.
            GraphError::ContigTooShort { .. } => unreachable!("contigs are at least r long"),
        }
    }
}

impl From<EulerError> for HierarchyError {
    fn from(e: EulerError) -> Self {
        // Instances have n >= 1, so every level graph has an edge.
        match e {
            EulerError::EmptyGraph => unreachable!("level graphs are never empty"),
        }
    }
}

/// Shared pipeline; callers validate the level count. Structurally any
/// `levels <= r - 1` works (the final overlap is then at least 1).
fn run_levels(
    inst: &Instance,
    levels: usize,
    tag: Algorithm,
) -> Result<(SuperstringSolution, HierarchyTrace), HierarchyError> {
    let r = inst.r();
    debug_assert!(r >= 3 && (1..r).contains(&levels));

    let mut trace = HierarchyTrace::default();
    let mut k = r - 1;
    let graph = build_debruijn(inst)?;
    let mut plan = min_euler_completion(&graph)?;
    let mut contigs = extract_contigs(&plan, k);
    trace
        .levels
        .push(level_record(1, k, &graph, &plan, &contigs));

    for level in 2..=levels {
        k = r - level;
        for c in &contigs.contigs {
            assert!(c.len() > k, "contig shorter than spectrum requires");
        }
        let graph = build_generalized_spectrum(&contigs, k)?;
        plan = min_euler_completion(&graph)?;
        contigs = extract_contigs(&plan, k);
        trace
            .levels
            .push(level_record(level, k, &graph, &plan, &contigs));
    }

    let text = expand_path(&plan, k);
    Ok((SuperstringSolution::new(text, tag, inst), trace))
}

/// Runs `levels` rounds of spectrum graph building, eulerian completion and
/// contig cutting, then expands the last plan into a superstring. Output
/// length is non-increasing in `levels`.
pub fn solve_hierarchical(
    inst: &Instance,
    levels: usize,
) -> Result<(SuperstringSolution, HierarchyTrace), HierarchyError> {
    let r = inst.r();
    if r < 3 {
        return Err(HierarchyError::RTooSmall { r });
    }
    let max = r - 2;
    if levels < 1 || levels > max {
        return Err(HierarchyError::BadLevelCount { levels, max });
    }
    run_levels(inst, levels, Algorithm::Hier(levels))
}

/// One-step solution: 2-SCS on the `(r-1)`-spectrum, expanded back.
pub fn solve_tau(inst: &Instance) -> Result<SuperstringSolution, HierarchyError> {
    let r = inst.r();
    if r < 3 {
        return Err(HierarchyError::RTooSmall { r });
    }
    Ok(run_levels(inst, 1, Algorithm::Tau)?.0)
}

/// Two-step solution: cut the first-stage traversal into contigs, then merge
/// them through the generalized `(r-2)`-spectrum. Never longer than `tau`.
/// For `r = 3` the second stage works on the 1-spectrum of the contigs.
pub fn solve_gamma(inst: &Instance) -> Result<SuperstringSolution, HierarchyError> {
    Ok(solve_gamma_traced(inst)?.0)
}

/// [`solve_gamma`] with its trace, for junction accounting.
pub fn solve_gamma_traced(
    inst: &Instance,
) -> Result<(SuperstringSolution, HierarchyTrace), HierarchyError> {
    let r = inst.r();
    if r < 3 {
        return Err(HierarchyError::RTooSmall { r });
    }
    run_levels(inst, 2, Algorithm::Gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::is_superstring;

    fn demo_set() -> Instance {
        Instance::from_strs(&[
            "ACGCA", "CGCAT", "GCATG", "CGCAG", "CAGTC", "CAGCA", "CATAA",
        ])
        .unwrap()
    }

    #[test]
    fn tau_demo_set() {
        let sol = solve_tau(&demo_set()).unwrap();
        assert_eq!(sol.length, 27);
        assert_eq!(sol.compression, 8);
        assert!(is_superstring(&sol.text, &demo_set()));
    }

    #[test]
    fn tau_single_chain() {
        let inst = Instance::from_strs(&["ABC", "BCD"]).unwrap();
        let sol = solve_tau(&inst).unwrap();
        assert_eq!(sol.text, b"ABCD");
    }

    #[test]
    fn tau_single_string() {
        let inst = Instance::from_strs(&["ACGCA"]).unwrap();
        assert_eq!(solve_tau(&inst).unwrap().text, b"ACGCA");
    }

    #[test]
    fn tau_rejects_short_strings() {
        let inst = Instance::from_strs(&["AB", "BA"]).unwrap();
        assert_eq!(solve_tau(&inst), Err(HierarchyError::RTooSmall { r: 2 }));
        assert_eq!(solve_gamma(&inst), Err(HierarchyError::RTooSmall { r: 2 }));
    }

    #[test]
    fn gamma_demo_set() {
        let sol = solve_gamma(&demo_set()).unwrap();
        assert_eq!(sol.length, 24);
        assert!(is_superstring(&sol.text, &demo_set()));
    }

    #[test]
    fn gamma_never_longer_than_tau() {
        let inst = demo_set();
        let tau = solve_tau(&inst).unwrap();
        let gamma = solve_gamma(&inst).unwrap();
        assert!(gamma.length <= tau.length);
    }

    #[test]
    fn gamma_runs_second_stage_for_r3() {
        // With r = 3 the second stage merges contigs on single characters.
        let inst = Instance::from_strs(&["ABC", "BCA", "CAB", "BAC"]).unwrap();
        let gamma = solve_gamma(&inst).unwrap();
        let tau = solve_tau(&inst).unwrap();
        assert!(gamma.length <= tau.length);
        assert!(is_superstring(&gamma.text, &inst));
    }

    #[test]
    fn gamma_equals_tau_on_single_path() {
        // The de Bruijn graph of this set is one path: no added edges, one
        // contig, and the second stage is an identity transform.
        let inst = Instance::from_strs(&["ABCD", "BCDE", "CDEF"]).unwrap();
        let tau = solve_tau(&inst).unwrap();
        let gamma = solve_gamma(&inst).unwrap();
        assert_eq!(tau.text, b"ABCDEF");
        assert_eq!(gamma.text, tau.text);
    }

    #[test]
    fn hierarchical_levels_demo_set() {
        let inst = demo_set();
        let (l1, t1) = solve_hierarchical(&inst, 1).unwrap();
        assert_eq!(l1.length, 27);
        assert_eq!(t1.levels.len(), 1);

        let (l2, t2) = solve_hierarchical(&inst, 2).unwrap();
        assert_eq!(l2.length, 24);
        assert_eq!(t2.levels.len(), 2);

        let (l3, _) = solve_hierarchical(&inst, 3).unwrap();
        assert!(l3.length <= l2.length);
        assert!(is_superstring(&l3.text, &inst));
    }

    #[test]
    fn hierarchical_level_bounds() {
        let inst = demo_set();
        assert_eq!(
            solve_hierarchical(&inst, 0),
            Err(HierarchyError::BadLevelCount { levels: 0, max: 3 })
        );
        assert_eq!(
            solve_hierarchical(&inst, 4),
            Err(HierarchyError::BadLevelCount { levels: 4, max: 3 })
        );
    }

    #[test]
    fn trace_structure() {
        let (_, trace) = solve_hierarchical(&demo_set(), 3).unwrap();
        for (i, rec) in trace.levels.iter().enumerate() {
            assert_eq!(rec.level, i + 1);
            assert_eq!(rec.k, 5 - rec.level);
            assert_eq!(rec.junctions, rec.edge_count - rec.contig_count);
        }
        // Cumulative lengths never increase with extra levels.
        for w in trace.levels.windows(2) {
            assert!(w[1].cumulative_length <= w[0].cumulative_length);
        }
    }

    #[test]
    fn trace_junction_accessors() {
        let (_, trace) = solve_gamma_traced(&demo_set()).unwrap();
        assert_eq!(trace.junctions_r1(), 2);
        assert_eq!(trace.junctions_r2(), 1);
    }
}
