//! Exact 2-SCS solving: complete a directed multigraph with the minimum
//! number of added edges so an eulerian path exists, then traverse it.
//!
//! For a graph whose weakly connected components (restricted to nodes with at
//! least one incident edge) have out/in-degree surpluses `d_i`, the minimum
//! number of edges that must be added is `sum(max(d_i, 1)) - 1`: each
//! component is first balanced internally down to one start and one end, then
//! the components are chained end-to-start. All tie-breaking below is
//! lexicographic on node labels so identical inputs yield identical plans.

use thiserror::Error;

use crate::graph::{DiMultiGraph, EdgeOrigin};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EulerError {
    #[error("graph has no edges")]
    EmptyGraph,
}

/// One step of an eulerian traversal, carrying everything expansion needs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanEdge {
    pub src: Vec<u8>,
    pub dst: Vec<u8>,
    /// Empty for added edges.
    pub label: Vec<u8>,
    pub origin: EdgeOrigin,
}

/// An eulerian edge sequence over a completed graph, plus the edges that were
/// added to complete it and the chosen start node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerPlan {
    pub edge_sequence: Vec<PlanEdge>,
    pub added_edges: Vec<(Vec<u8>, Vec<u8>)>,
    pub start_node: Vec<u8>,
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Per-component degree bookkeeping shared by the lower bound and the
/// completion itself. Components are sorted by their smallest node label;
/// surplus/deficit node lists are sorted likewise, with a node repeated once
/// per unit of imbalance.
struct Component {
    /// Node with the lexicographically smallest label.
    min_node: usize,
    /// Nodes with outdeg > indeg, repeated by surplus.
    surpluses: Vec<usize>,
    /// Nodes with indeg > outdeg, repeated by deficit.
    deficits: Vec<usize>,
}

fn components(g: &DiMultiGraph) -> Vec<Component> {
    let n = g.node_count();
    let mut outdeg = vec![0usize; n];
    let mut indeg = vec![0usize; n];
    let mut dsu = Dsu::new(n);
    for e in g.edges() {
        outdeg[e.src] += 1;
        indeg[e.dst] += 1;
        dsu.union(e.src, e.dst);
    }
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        if outdeg[v] + indeg[v] > 0 {
            let root = dsu.find(v);
            members[root].push(v);
        }
    }
    let mut comps = Vec::new();
    for nodes in members.into_iter().filter(|m| !m.is_empty()) {
        let mut nodes = nodes;
        nodes.sort_by(|&a, &b| g.node_label(a).cmp(g.node_label(b)));
        let mut surpluses = Vec::new();
        let mut deficits = Vec::new();
        for &v in &nodes {
            if outdeg[v] > indeg[v] {
                surpluses.extend(std::iter::repeat_n(v, outdeg[v] - indeg[v]));
            } else if indeg[v] > outdeg[v] {
                deficits.extend(std::iter::repeat_n(v, indeg[v] - outdeg[v]));
            }
        }
        comps.push(Component {
            min_node: nodes[0],
            surpluses,
            deficits,
        });
    }
    comps.sort_by(|a, b| g.node_label(a.min_node).cmp(g.node_label(b.min_node)));
    comps
}

/// `sum over components of max(d_i, 1), minus 1`, where `d_i` is the total
/// out-degree surplus of component `i`. This is the number of edges any
/// eulerian completion must add, and the number [`min_euler_completion`]
/// does add.
pub fn added_edge_lower_bound(g: &DiMultiGraph) -> Result<usize, EulerError> {
    if g.edge_count() == 0 {
        return Err(EulerError::EmptyGraph);
    }
    let comps = components(g);
    Ok(comps
        .iter()
        .map(|c| c.surpluses.len().max(1))
        .sum::<usize>()
        - 1)
}

/// Completes `g` with the minimum number of added edges so that an eulerian
/// path exists, and returns the traversal.
pub fn min_euler_completion(g: &DiMultiGraph) -> Result<EulerPlan, EulerError> {
    if g.edge_count() == 0 {
        return Err(EulerError::EmptyGraph);
    }
    let comps = components(g);

    // Balance each component down to a single start (surplus) and end
    // (deficit), pairing interior deficits to surpluses in label order.
    // Balanced components enter and leave through the same node.
    let mut added: Vec<(usize, usize)> = Vec::new();
    let mut entries = Vec::with_capacity(comps.len());
    let mut exits = Vec::with_capacity(comps.len());
    for c in &comps {
        let d = c.surpluses.len();
        debug_assert_eq!(d, c.deficits.len());
        if d == 0 {
            entries.push(c.min_node);
            exits.push(c.min_node);
        } else {
            for j in 0..d - 1 {
                added.push((c.deficits[j], c.surpluses[j + 1]));
            }
            entries.push(c.surpluses[0]);
            exits.push(c.deficits[d - 1]);
        }
    }
    // Chain the components: exit of i feeds the entry of i + 1.
    for i in 0..comps.len() - 1 {
        added.push((exits[i], entries[i + 1]));
    }
    let start = entries[0];

    // Completed edge list: original edges first, added edges after.
    struct CEdge<'a> {
        src: usize,
        dst: usize,
        label: &'a [u8],
        origin: EdgeOrigin,
    }
    let mut ce: Vec<CEdge> = g
        .edges()
        .iter()
        .map(|e| CEdge {
            src: e.src,
            dst: e.dst,
            label: &e.label,
            origin: EdgeOrigin::Original,
        })
        .collect();
    for &(src, dst) in &added {
        ce.push(CEdge {
            src,
            dst,
            label: &[],
            origin: EdgeOrigin::Added,
        });
    }

    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); g.node_count()];
    for (id, e) in ce.iter().enumerate() {
        adj[e.src].push(id);
    }
    // Original edges before added ones, then by label, then by target label.
    for list in &mut adj {
        list.sort_by(|&a, &b| {
            (ce[a].origin, ce[a].label, g.node_label(ce[a].dst)).cmp(&(
                ce[b].origin,
                ce[b].label,
                g.node_label(ce[b].dst),
            ))
        });
    }

    // Iterative Hierholzer. The stack records the edge used to reach each
    // node; popped edges form the path in reverse.
    let mut cursor = vec![0usize; g.node_count()];
    let mut stack: Vec<(usize, Option<usize>)> = vec![(start, None)];
    let mut seq_rev: Vec<usize> = Vec::with_capacity(ce.len());
    while let Some(&(v, _)) = stack.last() {
        if cursor[v] < adj[v].len() {
            let eid = adj[v][cursor[v]];
            cursor[v] += 1;
            stack.push((ce[eid].dst, Some(eid)));
        } else {
            let (_, via) = stack.pop().expect("stack non-empty");
            if let Some(eid) = via {
                seq_rev.push(eid);
            }
        }
    }
    assert_eq!(
        seq_rev.len(),
        ce.len(),
        "completed graph must be weakly connected"
    );
    seq_rev.reverse();
    debug_assert!({
        let mut balance = vec![0isize; g.node_count()];
        for e in &ce {
            balance[e.src] += 1;
            balance[e.dst] -= 1;
        }
        balance.iter().filter(|&&b| b > 0).sum::<isize>() <= 1
            && balance.iter().filter(|&&b| b < 0).sum::<isize>() >= -1
    });

    let edge_sequence = seq_rev
        .into_iter()
        .map(|eid| PlanEdge {
            src: g.node_label(ce[eid].src).to_vec(),
            dst: g.node_label(ce[eid].dst).to_vec(),
            label: ce[eid].label.to_vec(),
            origin: ce[eid].origin,
        })
        .collect();
    Ok(EulerPlan {
        edge_sequence,
        added_edges: added
            .into_iter()
            .map(|(s, d)| (g.node_label(s).to_vec(), g.node_label(d).to_vec()))
            .collect(),
        start_node: g.node_label(start).to_vec(),
    })
}

/// A 2-SCS instance: symbol pairs with multiplicities. A pair listed twice
/// counts the same as one entry with the summed multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pair2Scs {
    pub pairs: Vec<Pair>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pair {
    pub first: u8,
    pub second: u8,
    /// Must be at least 1.
    pub multiplicity: u32,
}

impl Pair2Scs {
    pub fn new(pairs: Vec<Pair>) -> Self {
        debug_assert!(pairs.iter().all(|p| p.multiplicity >= 1));
        Pair2Scs { pairs }
    }
}

/// Exact 2-SCS with multiplicities: builds the pair multigraph, completes it
/// minimally and reads the superstring off the eulerian path. The result
/// contains each pair consecutively at least `multiplicity` times and is of
/// minimum possible length among all such strings.
pub fn solve_2scs(p: &Pair2Scs) -> Result<Vec<u8>, EulerError> {
    let mut g = DiMultiGraph::new();
    for pair in &p.pairs {
        for _ in 0..pair.multiplicity {
            g.add_edge(
                &[pair.first],
                &[pair.second],
                vec![pair.first, pair.second],
                EdgeOrigin::Original,
            );
        }
    }
    let plan = min_euler_completion(&g)?;
    Ok(crate::graph::expand_path(&plan, 1))
}
