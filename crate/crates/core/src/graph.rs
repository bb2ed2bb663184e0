//! Overlap graph, de Bruijn graph on the `(r-1)`-spectrum, generalized
//! `k`-spectrum graph on contigs, contig extraction and path expansion.

use std::collections::HashMap;

use thiserror::Error;

use crate::euler::EulerPlan;
use crate::instance::{max_overlap, Instance};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("string length {r} too small, need r >= 3 for the (r-1)-spectrum")]
    RTooSmall { r: usize },
    #[error("contig #{index} has length {len}, need at least {min} for overlap {k}")]
    ContigTooShort {
        index: usize,
        len: usize,
        k: usize,
        min: usize,
    },
}

/// Complete directed graph on the instance strings; `weight(i, j)` is the
/// maximum overlap of string `i` onto string `j`. Zero-weight edges are
/// materialized in the dense table.
#[derive(Debug, Clone)]
pub struct OverlapGraph {
    n: usize,
    weights: Vec<usize>,
}

impl OverlapGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Overlap weight of the ordered pair `(i, j)`, `i != j`.
    pub fn weight(&self, i: usize, j: usize) -> usize {
        debug_assert!(i != j);
        self.weights[i * self.n + j]
    }
}

pub fn build_overlap_graph(inst: &Instance) -> OverlapGraph {
    let n = inst.n();
    let mut weights = vec![0usize; n * n];
    for (i, u) in inst.strings().iter().enumerate() {
        for (j, v) in inst.strings().iter().enumerate() {
            if i != j {
                weights[i * n + j] = max_overlap(u, v);
            }
        }
    }
    OverlapGraph { n, weights }
}

/// Whether an edge comes from an input string/contig or was added to make an
/// eulerian path exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum EdgeOrigin {
    Original,
    Added,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEdge {
    pub src: usize,
    pub dst: usize,
    pub label: Vec<u8>,
    pub origin: EdgeOrigin,
}

/// Directed multigraph with string-labeled nodes and labeled edges. Parallel
/// edges are permitted; node labels are unique.
#[derive(Debug, Clone, Default)]
pub struct DiMultiGraph {
    nodes: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
    edges: Vec<GraphEdge>,
}

impl DiMultiGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Index of the node with this label, inserting it on first sight.
    pub fn intern_node(&mut self, label: &[u8]) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.nodes.len();
        self.nodes.push(label.to_vec());
        self.index.insert(label.to_vec(), i);
        i
    }

    pub fn add_edge(&mut self, src: &[u8], dst: &[u8], label: Vec<u8>, origin: EdgeOrigin) {
        let src = self.intern_node(src);
        let dst = self.intern_node(dst);
        self.edges.push(GraphEdge {
            src,
            dst,
            label,
            origin,
        });
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn node_label(&self, i: usize) -> &[u8] {
        &self.nodes[i]
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    /// Debug export, one edge per line: `src dst label origin`, tab-separated,
    /// edges in insertion order.
    pub fn export_edges(&self) -> String {
        let mut out = String::new();
        for e in &self.edges {
            let origin = match e.origin {
                EdgeOrigin::Original => "original",
                EdgeOrigin::Added => "added",
            };
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                String::from_utf8_lossy(&self.nodes[e.src]),
                String::from_utf8_lossy(&self.nodes[e.dst]),
                String::from_utf8_lossy(&e.label),
                origin
            ));
        }
        out
    }
}

/// De Bruijn graph on the `(r-1)`-spectrum: one node per distinct `(r-1)`-mer
/// occurring as prefix or suffix of an instance string, one edge per string
/// from its prefix node to its suffix node.
pub fn build_debruijn(inst: &Instance) -> Result<DiMultiGraph, GraphError> {
    let r = inst.r();
    if r < 3 {
        return Err(GraphError::RTooSmall { r });
    }
    let k = r - 1;
    let mut g = DiMultiGraph::new();
    for s in inst.strings() {
        g.add_edge(&s[..k], &s[s.len() - k..], s.clone(), EdgeOrigin::Original);
    }
    Ok(g)
}

/// Holds the contigs cut out of an eulerian plan, in discovery order.
/// Duplicate contig strings are kept: each is a distinct edge downstream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContigSet {
    pub contigs: Vec<Vec<u8>>,
    /// Overlap length that was used to build the contigs.
    pub source_k: usize,
}

impl ContigSet {
    pub fn total_len(&self) -> usize {
        self.contigs.iter().map(Vec::len).sum()
    }
}

/// Generalized `k`-spectrum graph: nodes are the length-`k` prefixes and
/// suffixes of the contigs, one edge per contig.
pub fn build_generalized_spectrum(cs: &ContigSet, k: usize) -> Result<DiMultiGraph, GraphError> {
    let mut g = DiMultiGraph::new();
    for (index, c) in cs.contigs.iter().enumerate() {
        if c.len() < k + 1 {
            return Err(GraphError::ContigTooShort {
                index,
                len: c.len(),
                k,
                min: k + 1,
            });
        }
        g.add_edge(&c[..k], &c[c.len() - k..], c.clone(), EdgeOrigin::Original);
    }
    Ok(g)
}

/// Expands an eulerian edge sequence into a string. Consecutive original
/// edges meet at a shared node and merge with overlap `k`; added edges carry
/// no characters and force plain concatenation of their flanking labels.
pub fn expand_path(plan: &EulerPlan, k: usize) -> Vec<u8> {
    let mut out = Vec::new();
    let mut prev_original = false;
    for e in &plan.edge_sequence {
        match e.origin {
            EdgeOrigin::Added => prev_original = false,
            EdgeOrigin::Original => {
                if prev_original {
                    out.extend_from_slice(&e.label[k..]);
                } else {
                    out.extend_from_slice(&e.label);
                }
                prev_original = true;
            }
        }
    }
    out
}

/// Splits the eulerian edge sequence at every added edge; each maximal run of
/// original edges is expanded (overlap `k`) into one contig.
pub fn extract_contigs(plan: &EulerPlan, k: usize) -> ContigSet {
    let mut contigs = Vec::new();
    let mut current: Vec<u8> = Vec::new();
    for e in &plan.edge_sequence {
        match e.origin {
            EdgeOrigin::Added => {
                if !current.is_empty() {
                    contigs.push(std::mem::take(&mut current));
                }
            }
            EdgeOrigin::Original => {
                if current.is_empty() {
                    current.extend_from_slice(&e.label);
                } else {
                    current.extend_from_slice(&e.label[k..]);
                }
            }
        }
    }
    if !current.is_empty() {
        contigs.push(current);
    }
    ContigSet {
        contigs,
        source_k: k,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::{min_euler_completion, PlanEdge};
    use crate::instance::is_superstring;

    fn demo_set() -> Instance {
        Instance::from_strs(&[
            "ACGCA", "CGCAT", "GCATG", "CGCAG", "CAGTC", "CAGCA", "CATAA",
        ])
        .unwrap()
    }

    /// The branching pair set used throughout the tests, written as a
    /// hand-built plan over single-character nodes (overlap 1):
    /// JK .KH. HI .IF. FG .GA. AB BD DE .EB. BC, dots marking added edges.
    fn branching_pairs_plan() -> EulerPlan {
        let orig = |src: &str, dst: &str, label: &str| PlanEdge {
            src: src.into(),
            dst: dst.into(),
            label: label.into(),
            origin: EdgeOrigin::Original,
        };
        let added = |src: &str, dst: &str| PlanEdge {
            src: src.into(),
            dst: dst.into(),
            label: Vec::new(),
            origin: EdgeOrigin::Added,
        };
        EulerPlan {
            edge_sequence: vec![
                orig("J", "K", "JK"),
                added("K", "H"),
                orig("H", "I", "HI"),
                added("I", "F"),
                orig("F", "G", "FG"),
                added("G", "A"),
                orig("A", "B", "AB"),
                orig("B", "D", "BD"),
                orig("D", "E", "DE"),
                added("E", "B"),
                orig("B", "C", "BC"),
            ],
            added_edges: vec![
                (b"K".to_vec(), b"H".to_vec()),
                (b"I".to_vec(), b"F".to_vec()),
                (b"G".to_vec(), b"A".to_vec()),
                (b"E".to_vec(), b"B".to_vec()),
            ],
            start_node: b"J".to_vec(),
        }
    }

    #[test]
    fn overlap_graph_demo_weights() {
        let inst = demo_set();
        let g = build_overlap_graph(&inst);
        // ACGCA -> CGCAT and CGCAT -> GCATG share 4 characters.
        assert_eq!(g.weight(0, 1), 4);
        assert_eq!(g.weight(1, 2), 4);
        assert_eq!(g.weight(4, 0), 0);
    }

    #[test]
    fn overlap_graph_disjoint_alphabets() {
        let inst = Instance::from_strs(&["AB", "CD"]).unwrap();
        let g = build_overlap_graph(&inst);
        assert_eq!(g.weight(0, 1), 0);
        assert_eq!(g.weight(1, 0), 0);
    }

    #[test]
    fn debruijn_demo_set() {
        let g = build_debruijn(&demo_set()).unwrap();
        // Distinct 4-mers among prefixes/suffixes: ACGC CGCA GCAT CATG GCAG
        // CAGT AGTC CAGC AGCA CATA ATAA.
        assert_eq!(g.node_count(), 11);
        assert_eq!(g.edge_count(), 7);
    }

    #[test]
    fn debruijn_small_cases() {
        let single = Instance::from_strs(&["ABC"]).unwrap();
        let g = build_debruijn(&single).unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.node_label(0), b"AB");
        assert_eq!(g.node_label(1), b"BC");

        let loopy = Instance::from_strs(&["ABA"]).unwrap();
        let g = build_debruijn(&loopy).unwrap();
        assert_eq!(g.node_label(g.edges()[0].src), b"AB");
        assert_eq!(g.node_label(g.edges()[0].dst), b"BA");

        let too_short = Instance::from_strs(&["AB", "CD"]).unwrap();
        assert_eq!(
            build_debruijn(&too_short).unwrap_err(),
            GraphError::RTooSmall { r: 2 }
        );
    }

    #[test]
    fn debruijn_edge_count_equals_n() {
        for strs in [&["ACG", "CGT", "GTA"][..], &["AAA", "AAB", "ABA"][..]] {
            let inst = Instance::from_strs(strs).unwrap();
            let g = build_debruijn(&inst).unwrap();
            assert_eq!(g.edge_count(), inst.n());
        }
    }

    #[test]
    fn generalized_spectrum_contigs() {
        let cs = ContigSet {
            contigs: ["ACGCATG", "CGCAG", "CAGTC", "CAGCA", "CATAA"]
                .iter()
                .map(|s| s.as_bytes().to_vec())
                .collect(),
            source_k: 4,
        };
        let g = build_generalized_spectrum(&cs, 3).unwrap();
        assert_eq!(g.edge_count(), 5);
        let ends: Vec<(Vec<u8>, Vec<u8>)> = g
            .edges()
            .iter()
            .map(|e| (g.node_label(e.src).to_vec(), g.node_label(e.dst).to_vec()))
            .collect();
        assert_eq!(
            ends,
            vec![
                (b"ACG".to_vec(), b"ATG".to_vec()),
                (b"CGC".to_vec(), b"CAG".to_vec()),
                (b"CAG".to_vec(), b"GTC".to_vec()),
                (b"CAG".to_vec(), b"GCA".to_vec()),
                (b"CAT".to_vec(), b"TAA".to_vec()),
            ]
        );
    }

    #[test]
    fn generalized_spectrum_small_cases() {
        let cs = ContigSet {
            contigs: vec![b"ABCD".to_vec()],
            source_k: 3,
        };
        let g = build_generalized_spectrum(&cs, 2).unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edge_count(), 1);

        let cs = ContigSet {
            contigs: vec![b"ABC".to_vec()],
            source_k: 2,
        };
        assert_eq!(
            build_generalized_spectrum(&cs, 3).unwrap_err(),
            GraphError::ContigTooShort {
                index: 0,
                len: 3,
                k: 3,
                min: 4
            }
        );
    }

    #[test]
    fn expand_branching_pairs_plan() {
        let plan = branching_pairs_plan();
        assert_eq!(expand_path(&plan, 1), b"JKHIFGABDEBC");
    }

    #[test]
    fn expand_single_edge() {
        let plan = EulerPlan {
            edge_sequence: vec![PlanEdge {
                src: b"ACGC".to_vec(),
                dst: b"CGCA".to_vec(),
                label: b"ACGCA".to_vec(),
                origin: EdgeOrigin::Original,
            }],
            added_edges: vec![],
            start_node: b"ACGC".to_vec(),
        };
        assert_eq!(expand_path(&plan, 4), b"ACGCA");
    }

    #[test]
    fn expand_demo_first_stage() {
        let g = build_debruijn(&demo_set()).unwrap();
        let plan = min_euler_completion(&g).unwrap();
        let tau = expand_path(&plan, 4);
        assert_eq!(tau.len(), 27);
        assert!(is_superstring(&tau, &demo_set()));
    }

    #[test]
    fn contigs_from_branching_pairs_plan() {
        let plan = branching_pairs_plan();
        let cs = extract_contigs(&plan, 1);
        // Simulated by hand: runs are JK | HI | FG | AB BD DE | BC, and since
        // no added edge is terminal the count equals added + 1.
        let expect: Vec<Vec<u8>> = ["JK", "HI", "FG", "ABDE", "BC"]
            .iter()
            .map(|s| s.as_bytes().to_vec())
            .collect();
        assert_eq!(cs.contigs, expect);
        assert_eq!(cs.contigs.len(), plan.added_edges.len() + 1);
        assert_eq!(cs.total_len(), expand_path(&plan, 1).len());
    }

    #[test]
    fn contigs_demo_first_stage() {
        let g = build_debruijn(&demo_set()).unwrap();
        let plan = min_euler_completion(&g).unwrap();
        let cs = extract_contigs(&plan, 4);
        assert_eq!(cs.contigs.len(), 5);
        assert_eq!(cs.total_len(), 27);
        // Every instance string sits in exactly one first-stage contig.
        for s in demo_set().strings() {
            let hits = cs
                .contigs
                .iter()
                .filter(|c| crate::instance::contains_sub(c, s))
                .count();
            assert_eq!(hits, 1, "{}", String::from_utf8_lossy(s));
        }
    }

    #[test]
    fn contigs_without_added_edges() {
        let inst = Instance::from_strs(&["ABC", "BCD"]).unwrap();
        let g = build_debruijn(&inst).unwrap();
        let plan = min_euler_completion(&g).unwrap();
        assert!(plan.added_edges.is_empty());
        let cs = extract_contigs(&plan, 2);
        assert_eq!(cs.contigs, vec![b"ABCD".to_vec()]);
        assert_eq!(cs.contigs[0], expand_path(&plan, 2));
    }

    #[test]
    fn export_edges_format() {
        let inst = Instance::from_strs(&["ABC"]).unwrap();
        let g = build_debruijn(&inst).unwrap();
        assert_eq!(g.export_edges(), "AB\tBC\tABC\toriginal\n");
    }
}
