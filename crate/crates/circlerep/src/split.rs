//! Split discovery, the ~ equivalence classes, extended classes with their
//! short sets, and quotient graphs with a marker vertex.
//!
//! A split is a partition (A, B, s(A), s(B)) where A and B are completely
//! joined, the short sets only attach to their own side, and both sides have
//! at least two vertices. For a connected graph a split is determined by the
//! bipartition (A ∪ s(A) | B ∪ s(B)): the crossing edges must form a
//! complete bipartite graph between A and B.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SplitError {
    #[error("graph has {n} vertices, brute-force split bound is {bound}")]
    TooLarge { n: usize, bound: usize },
}

pub const BRUTEFORCE_BOUND: usize = 12;

/// A split (A, B, s(A), s(B)); the four sets partition the vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub short_a: Vec<String>,
    pub short_b: Vec<String>,
}

impl Split {
    pub fn side_a(&self) -> Vec<String> {
        self.a.iter().chain(&self.short_a).cloned().collect()
    }

    pub fn side_b(&self) -> Vec<String> {
        self.b.iter().chain(&self.short_b).cloned().collect()
    }

    /// Trivial means one side is a single long vertex with a single leaf.
    pub fn is_trivial(&self) -> bool {
        (self.a.len() == 1 && self.short_a.len() == 1)
            || (self.b.len() == 1 && self.short_b.len() == 1)
    }
}

/// The ~ classes Φ_1..Φ_ℓ, each with its attached short set s(Φ_i). The
/// extended class Ψ_i is Φ_i ∪ s(Φ_i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimClassPartition {
    pub classes: Vec<SimClass>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimClass {
    pub phi: Vec<String>,
    pub short: Vec<String>,
}

impl SimClass {
    pub fn extended(&self) -> Vec<String> {
        self.phi.iter().chain(&self.short).cloned().collect()
    }
}

/// A quotient graph on Ψ_i plus a fresh marker vertex adjacent to Φ_i.
#[derive(Debug, Clone)]
pub struct QuotientGraph {
    pub graph: Graph,
    pub marker: String,
}

fn sorted_by_insertion(g: &Graph, labels: &mut [String]) {
    labels.sort_by_key(|l| g.idx(l).unwrap_or(usize::MAX));
}

/// Checks every split invariant, including that the short sets are exactly
/// the components of G \ (A ∪ B) attached to A resp. B.
pub fn verify_split(g: &Graph, sp: &Split) -> bool {
    let n = g.vertex_count();
    // the four sets partition V(g)
    let mut tag = vec![0u8; n]; // 1=A, 2=B, 3=sA, 4=sB
    let mut total = 0usize;
    for (t, set) in [(1u8, &sp.a), (2, &sp.b), (3, &sp.short_a), (4, &sp.short_b)] {
        for l in set {
            let Some(i) = g.idx(l) else { return false };
            if tag[i] != 0 {
                return false;
            }
            tag[i] = t;
            total += 1;
        }
    }
    if total != n || sp.a.is_empty() || sp.b.is_empty() {
        return false;
    }
    // both sides at least two vertices
    if sp.a.len() + sp.short_a.len() < 2 || sp.b.len() + sp.short_b.len() < 2 {
        return false;
    }
    // A x B complete
    for la in &sp.a {
        for lb in &sp.b {
            if !g.has_edge(la, lb) {
                return false;
            }
        }
    }
    // no edges s(A) <-> B ∪ s(B), none s(B) <-> A ∪ s(A)
    for i in 0..n {
        for &j in g.adj_idx(i) {
            let (ti, tj) = (tag[i], tag[j]);
            if (ti == 3 && (tj == 2 || tj == 4)) || (ti == 4 && (tj == 1 || tj == 3)) {
                return false;
            }
        }
    }
    // shorts are exactly the components of G \ (A ∪ B), each attached to its side
    let long = |i: usize| tag[i] == 1 || tag[i] == 2;
    let mut seen = vec![false; n];
    for start in 0..n {
        if long(start) || seen[start] {
            continue;
        }
        let mut comp = vec![start];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &u in g.adj_idx(v) {
                if !long(u) && !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                    comp.push(u);
                }
            }
        }
        let side = tag[comp[0]];
        let want = if side == 3 { 1 } else { 2 };
        if comp.iter().any(|&v| tag[v] != side) {
            return false;
        }
        let attached = comp
            .iter()
            .any(|&v| g.adj_idx(v).iter().any(|&u| tag[u] == want));
        if !attached {
            return false;
        }
    }
    true
}

/// Builds the split determined by a candidate side, or None when the
/// crossing edges are not a complete bipartite graph between nonempty long
/// sets with both sides of size at least two.
fn bipartition_split(g: &Graph, in_side: &[bool]) -> Option<Split> {
    let n = g.vertex_count();
    let side_len = in_side.iter().filter(|&&b| b).count();
    if side_len < 2 || n - side_len < 2 {
        return None;
    }
    let mut a_set: Vec<usize> = Vec::new();
    let mut b_set: Vec<usize> = Vec::new();
    for v in 0..n {
        let crossing = g.adj_idx(v).iter().any(|&u| in_side[u] != in_side[v]);
        if crossing {
            if in_side[v] {
                a_set.push(v);
            } else {
                b_set.push(v);
            }
        }
    }
    if a_set.is_empty() || b_set.is_empty() {
        return None;
    }
    // every long vertex must cross to exactly the opposite long set
    for &a in &a_set {
        let mut cnt = 0;
        for &u in g.adj_idx(a) {
            if !in_side[u] {
                if !b_set.contains(&u) {
                    return None;
                }
                cnt += 1;
            }
        }
        if cnt != b_set.len() {
            return None;
        }
    }
    for &b in &b_set {
        if g.adj_idx(b).iter().filter(|&&u| in_side[u]).count() != a_set.len() {
            return None;
        }
    }
    let idx_of = |v: usize| g.label(v).to_string();
    let mut sp = Split {
        a: a_set.iter().map(|&v| idx_of(v)).collect(),
        b: b_set.iter().map(|&v| idx_of(v)).collect(),
        short_a: (0..n)
            .filter(|&v| in_side[v] && !a_set.contains(&v))
            .map(idx_of)
            .collect(),
        short_b: (0..n)
            .filter(|&v| !in_side[v] && !b_set.contains(&v))
            .map(idx_of)
            .collect(),
    };
    // normalize: the side holding the first vertex is the A side
    if !in_side[0] {
        std::mem::swap(&mut sp.a, &mut sp.b);
        std::mem::swap(&mut sp.short_a, &mut sp.short_b);
    }
    if !verify_split(g, &sp) {
        return None;
    }
    Some(sp)
}

/// Every split of `g`, by checking all bipartitions. Intended as the oracle
/// for `find_nontrivial_split`; bounded to 12 vertices.
pub fn all_splits_bruteforce(g: &Graph) -> Result<Vec<Split>, SplitError> {
    let n = g.vertex_count();
    if n > BRUTEFORCE_BOUND {
        return Err(SplitError::TooLarge { n, bound: BRUTEFORCE_BOUND });
    }
    let mut out = Vec::new();
    if n < 4 {
        return Ok(out);
    }
    // vertex 0 stays on the A side so each bipartition is seen once
    for mask in 0u32..(1 << (n - 1)) {
        let mut in_side = vec![false; n];
        in_side[0] = true;
        for v in 1..n {
            in_side[v] = mask >> (v - 1) & 1 == 1;
        }
        if let Some(sp) = bipartition_split(g, &in_side) {
            out.push(sp);
        }
    }
    Ok(out)
}

/// Grows the minimal valid side containing `seeds` and avoiding `q`, where
/// `q` is adjacent to at least one seed. Two forcing rules apply until a
/// fixpoint: a member not adjacent to `q` can never be long, so its crossing
/// neighbors are absorbed; members adjacent to `q` are certainly long, so
/// their crossing neighborhoods must agree and every disagreement is
/// absorbed. Returns None when `q` itself gets forced in.
fn closure(g: &Graph, seeds: [usize; 2], q: usize) -> Option<Vec<bool>> {
    let n = g.vertex_count();
    let mut in_x = vec![false; n];
    let mut in_d = vec![false; n];
    let mut d_members: Vec<usize> = Vec::new();
    let mut d_init = false;
    let mut queue: VecDeque<usize> = VecDeque::new();
    for s in seeds {
        if !in_x[s] {
            in_x[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        let active = g.has_edge_idx(v, q);
        if active {
            if !d_init {
                d_init = true;
                for &w in g.adj_idx(v) {
                    if !in_x[w] {
                        in_d[w] = true;
                        d_members.push(w);
                    }
                }
            } else {
                let mut force: Vec<usize> = Vec::new();
                for &w in g.adj_idx(v) {
                    if !in_x[w] && !in_d[w] {
                        force.push(w);
                    }
                }
                for &w in &d_members {
                    if !in_x[w] && in_d[w] && !g.has_edge_idx(v, w) {
                        force.push(w);
                    }
                }
                for w in force {
                    if w == q {
                        return None;
                    }
                    if !in_x[w] {
                        in_x[w] = true;
                        in_d[w] = false;
                        queue.push_back(w);
                    }
                }
            }
        } else {
            for &w in g.adj_idx(v).clone().iter() {
                if !in_x[w] {
                    if w == q {
                        return None;
                    }
                    in_x[w] = true;
                    in_d[w] = false;
                    queue.push_back(w);
                }
            }
        }
    }
    Some(in_x)
}

/// Finds a non-trivial split of a connected graph with at least 4 vertices,
/// or None when only trivial splits (or none at all) exist. Among the
/// candidates examined, the split whose smaller side is largest wins, ties
/// going to the earliest candidate in scan order.
///
/// Two candidate families cover all non-trivial splits: cut vertices with
/// component groupings cover splits with a single long vertex on one side,
/// and seeded closures (two vertices in, one common neighbor out) cover
/// splits with at least two long vertices per side.
pub fn find_nontrivial_split(g: &Graph) -> Option<Split> {
    let n = g.vertex_count();
    if n < 4 || !g.is_connected() {
        return None;
    }
    let mut best: Option<(usize, Split)> = None;
    let max_min_side = n / 2;
    let mut consider = |sp: Split, best: &mut Option<(usize, Split)>| {
        if sp.is_trivial() {
            return false;
        }
        let m = (sp.a.len() + sp.short_a.len()).min(sp.b.len() + sp.short_b.len());
        if best.as_ref().is_none_or(|(bm, _)| m > *bm) {
            *best = Some((m, sp));
        }
        best.as_ref().is_some_and(|(bm, _)| *bm == max_min_side)
    };

    // cut-vertex candidates
    'outer: for a in 0..n {
        let comps = components_without(g, a);
        let k = comps.len();
        if k < 2 {
            continue;
        }
        let groupings: Vec<u32> = if k <= 10 {
            (1..(1u32 << k) - 1).collect()
        } else {
            // send each single component, or all but one, to the far side
            let mut gs: Vec<u32> = Vec::new();
            for i in 0..k {
                gs.push(1 << i);
                gs.push(((1u32 << k) - 1) ^ (1 << i));
            }
            gs
        };
        for mask in groupings {
            let mut in_side = vec![false; n];
            in_side[a] = true;
            for (i, comp) in comps.iter().enumerate() {
                if mask >> i & 1 == 0 {
                    for &v in comp {
                        in_side[v] = true;
                    }
                }
            }
            if let Some(sp) = bipartition_split(g, &in_side) {
                if consider(sp, &mut best) {
                    break 'outer;
                }
            }
        }
    }

    if best.as_ref().is_none_or(|(m, _)| *m < max_min_side) {
        'outer2: for a1 in 0..n {
            for a2 in a1 + 1..n {
                for &q in g.adj_idx(a1) {
                    if q == a2 || !g.has_edge_idx(a2, q) {
                        continue;
                    }
                    if let Some(in_x) = closure(g, [a1, a2], q) {
                        if let Some(sp) = bipartition_split(g, &in_x) {
                            if consider(sp, &mut best) {
                                break 'outer2;
                            }
                        }
                    }
                }
            }
        }
    }

    best.map(|(_, sp)| sp)
}

fn components_without(g: &Graph, removed: usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    seen[removed] = true;
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &u in g.adj_idx(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                    comp.push(u);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Computes the ~ equivalence on the long vertices: same-side non-adjacent
/// pairs are related (C1), long vertices joined by a path whose inner
/// vertices are all short are related (C2), and the relation is closed
/// transitively. Each class is returned with its attached short components.
pub fn sim_partition(g: &Graph, sp: &Split) -> SimClassPartition {
    debug_assert!(verify_split(g, sp));
    let n = g.vertex_count();
    let mut side = vec![0u8; n]; // 1 = A-long, 2 = B-long, 0 = short
    let mut longs: Vec<usize> = Vec::new();
    for l in &sp.a {
        let i = g.idx(l).unwrap();
        side[i] = 1;
        longs.push(i);
    }
    for l in &sp.b {
        let i = g.idx(l).unwrap();
        side[i] = 2;
        longs.push(i);
    }
    longs.sort_unstable();

    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            parent[x] = find(parent, parent[x]);
        }
        parent[x]
    }
    let mut union = |parent: &mut Vec<usize>, x: usize, y: usize| {
        let (rx, ry) = (find(parent, x), find(parent, y));
        if rx != ry {
            let (lo, hi) = (rx.min(ry), rx.max(ry));
            parent[hi] = lo;
        }
    };

    // (C1) same side, non-adjacent
    for (i, &x) in longs.iter().enumerate() {
        for &y in &longs[i + 1..] {
            if side[x] == side[y] && !g.has_edge_idx(x, y) {
                union(&mut parent, x, y);
            }
        }
    }

    // (C2) long vertices attached to a common short component
    let mut comp_of = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if side[start] != 0 || comp_of[start] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut comp = vec![start];
        comp_of[start] = id;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &u in g.adj_idx(v) {
                if side[u] == 0 && comp_of[u] == usize::MAX {
                    comp_of[u] = id;
                    stack.push(u);
                    comp.push(u);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    let mut comp_attach: Vec<Vec<usize>> = vec![Vec::new(); comps.len()];
    for (id, comp) in comps.iter().enumerate() {
        let mut attached: Vec<usize> = comp
            .iter()
            .flat_map(|&v| g.adj_idx(v).iter().copied())
            .filter(|&u| side[u] != 0)
            .collect();
        attached.sort_unstable();
        attached.dedup();
        for w in attached.windows(2) {
            union(&mut parent, w[0], w[1]);
        }
        comp_attach[id] = attached;
    }

    // collect classes ordered by smallest member
    let mut class_of_root: std::collections::HashMap<usize, usize> = Default::default();
    let mut classes: Vec<SimClass> = Vec::new();
    for &v in &longs {
        let r = find(&mut parent, v);
        let id = *class_of_root.entry(r).or_insert_with(|| {
            classes.push(SimClass { phi: Vec::new(), short: Vec::new() });
            classes.len() - 1
        });
        classes[id].phi.push(g.label(v).to_string());
    }
    for (id, comp) in comps.iter().enumerate() {
        // every short component of a verified split attaches to some long vertex
        let r = find(&mut parent, comp_attach[id][0]);
        let cid = class_of_root[&r];
        for &v in comp {
            classes[cid].short.push(g.label(v).to_string());
        }
    }
    for c in &mut classes {
        sorted_by_insertion(g, &mut c.phi);
        sorted_by_insertion(g, &mut c.short);
    }
    debug_assert!(classes.iter().all(|c| {
        let sides: Vec<u8> = c.phi.iter().map(|l| side[g.idx(l).unwrap()]).collect();
        sides.windows(2).all(|w| w[0] == w[1])
    }));
    SimClassPartition { classes }
}

/// The graph on Ψ_i plus a fresh marker adjacent to exactly Φ_i. Marker
/// labels start with `@`, which input formats reject, so they never collide
/// with user vertices; a numeric suffix handles nested quotients.
pub fn quotient(g: &Graph, part: &SimClassPartition, i: usize) -> QuotientGraph {
    let class = &part.classes[i];
    let mut verts = class.extended();
    sorted_by_insertion(g, &mut verts);
    let mut marker = format!("@{}", i + 1);
    let mut k = 0usize;
    while verts.iter().any(|v| *v == marker) {
        k += 1;
        marker = format!("@{}.{k}", i + 1);
    }
    let mut edges: Vec<(String, String)> = Vec::new();
    for (ai, u) in verts.iter().enumerate() {
        for v in &verts[ai + 1..] {
            if g.has_edge(u, v) {
                edges.push((u.clone(), v.clone()));
            }
        }
    }
    for u in &class.phi {
        edges.push((marker.clone(), u.clone()));
    }
    let mut all = verts;
    all.push(marker.clone());
    QuotientGraph {
        graph: Graph::build(all, edges).unwrap(),
        marker,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g_star() -> Graph {
        Graph::build(
            ["s", "t", "u", "v", "w", "x"],
            [("s", "u"), ("t", "u"), ("u", "v"), ("v", "x"), ("v", "w")],
        )
        .unwrap()
    }

    fn split_of(a: &[&str], b: &[&str], sa: &[&str], sb: &[&str]) -> Split {
        Split {
            a: a.iter().map(|s| s.to_string()).collect(),
            b: b.iter().map(|s| s.to_string()).collect(),
            short_a: sa.iter().map(|s| s.to_string()).collect(),
            short_b: sb.iter().map(|s| s.to_string()).collect(),
        }
    }

    #[test]
    fn verify_fixture_split() {
        let g = g_star();
        assert!(verify_split(&g, &split_of(&["u"], &["v"], &["s", "t"], &["x", "w"])));
        // x is adjacent to v, so it cannot be short on the A side
        assert!(!verify_split(&g, &split_of(&["u"], &["v"], &["s", "t", "x"], &["w"])));
        let p4 = Graph::build(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")]).unwrap();
        assert!(verify_split(&p4, &split_of(&["b"], &["c"], &["a"], &["d"])));
    }

    #[test]
    fn bruteforce_k4() {
        let k4 = Graph::build(
            ["1", "2", "3", "4"],
            [("1", "2"), ("1", "3"), ("1", "4"), ("2", "3"), ("2", "4"), ("3", "4")],
        )
        .unwrap();
        let splits = all_splits_bruteforce(&k4).unwrap();
        assert_eq!(splits.len(), 3);
        for sp in &splits {
            assert_eq!(sp.a.len(), 2);
            assert_eq!(sp.b.len(), 2);
            assert!(sp.short_a.is_empty() && sp.short_b.is_empty());
        }
    }

    #[test]
    fn bruteforce_c5_empty() {
        let c5 = Graph::build(
            ["1", "2", "3", "4", "5"],
            [("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "1")],
        )
        .unwrap();
        assert!(all_splits_bruteforce(&c5).unwrap().is_empty());
        assert!(find_nontrivial_split(&c5).is_none());
    }

    #[test]
    fn bruteforce_fixture_contains_uv_split() {
        let g = g_star();
        let splits = all_splits_bruteforce(&g).unwrap();
        let want = split_of(&["u"], &["v"], &["s", "t"], &["x", "w"]);
        assert!(splits.iter().any(|sp| *sp == want));
        for sp in &splits {
            assert!(verify_split(&g, sp));
        }
    }

    #[test]
    fn finder_picks_balanced_split_on_fixture() {
        let g = g_star();
        let sp = find_nontrivial_split(&g).unwrap();
        assert!(verify_split(&g, &sp));
        assert!(!sp.is_trivial());
        let want = split_of(&["u"], &["v"], &["s", "t"], &["x", "w"]);
        let swapped = split_of(&["v"], &["u"], &["x", "w"], &["s", "t"]);
        assert!(sp == want || sp == swapped, "got {sp:?}");
    }

    #[test]
    fn p4_has_only_the_trivial_split() {
        let p4 = Graph::build(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")]).unwrap();
        let splits = all_splits_bruteforce(&p4).unwrap();
        assert_eq!(splits.len(), 1);
        assert!(splits[0].is_trivial());
        assert!(find_nontrivial_split(&p4).is_none());
    }

    #[test]
    fn finder_matches_bruteforce_existence_small() {
        // all graphs on 4 and 5 vertices, plus seeded samples up to 10
        for n in [4usize, 5] {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
                let edges: Vec<(String, String)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &(i, j))| (i.to_string(), j.to_string()))
                    .collect();
                let g = Graph::build(labels, edges).unwrap();
                if !g.is_connected() {
                    continue;
                }
                let has_nontrivial = all_splits_bruteforce(&g)
                    .unwrap()
                    .iter()
                    .any(|sp| !sp.is_trivial());
                let found = find_nontrivial_split(&g);
                assert_eq!(found.is_some(), has_nontrivial, "graph {g:?}");
                if let Some(sp) = found {
                    assert!(verify_split(&g, &sp));
                    assert!(!sp.is_trivial());
                }
            }
        }
    }

    #[test]
    fn sim_partition_fixture() {
        let g = g_star();
        let sp = split_of(&["u"], &["v"], &["s", "t"], &["x", "w"]);
        let part = sim_partition(&g, &sp);
        assert_eq!(part.classes.len(), 2);
        assert_eq!(part.classes[0].phi, vec!["u"]);
        assert_eq!(part.classes[0].short, vec!["s", "t"]);
        assert_eq!(part.classes[1].phi, vec!["v"]);
        assert_eq!(part.classes[1].short, vec!["x", "w"]);
    }

    #[test]
    fn sim_partition_c4_and_k4() {
        let c4 = Graph::build(
            ["a1", "a2", "b1", "b2"],
            [("a1", "b1"), ("a1", "b2"), ("a2", "b1"), ("a2", "b2")],
        )
        .unwrap();
        let sp = split_of(&["a1", "a2"], &["b1", "b2"], &[], &[]);
        assert!(verify_split(&c4, &sp));
        let part = sim_partition(&c4, &sp);
        assert_eq!(part.classes.len(), 2);
        assert_eq!(part.classes[0].phi, vec!["a1", "a2"]);
        assert_eq!(part.classes[1].phi, vec!["b1", "b2"]);

        let k4 = Graph::build(
            ["1", "2", "3", "4"],
            [("1", "2"), ("1", "3"), ("1", "4"), ("2", "3"), ("2", "4"), ("3", "4")],
        )
        .unwrap();
        let sp = split_of(&["1", "2"], &["3", "4"], &[], &[]);
        let part = sim_partition(&k4, &sp);
        assert_eq!(part.classes.len(), 4);
        assert!(part.classes.iter().all(|c| c.phi.len() == 1 && c.short.is_empty()));
    }

    #[test]
    fn quotient_fixture() {
        let g = g_star();
        let sp = split_of(&["u"], &["v"], &["s", "t"], &["x", "w"]);
        let part = sim_partition(&g, &sp);
        let q = quotient(&g, &part, 0);
        assert_eq!(q.marker, "@1");
        assert_eq!(q.graph.vertex_count(), 4);
        assert!(q.graph.has_edge("u", "s"));
        assert!(q.graph.has_edge("u", "t"));
        assert!(q.graph.has_edge("u", "@1"));
        assert!(!q.graph.has_edge("s", "@1"));
        assert_eq!(q.graph.classify_shape().unwrap(), crate::graph::Shape::Star("u".into()));

        let q2 = quotient(&g, &part, 1);
        assert!(q2.graph.has_edge("v", "@2"));
        assert_eq!(q2.graph.vertex_count(), 4);
    }

    #[test]
    fn quotient_c4_class() {
        let c4 = Graph::build(
            ["a1", "a2", "b1", "b2"],
            [("a1", "b1"), ("a1", "b2"), ("a2", "b1"), ("a2", "b2")],
        )
        .unwrap();
        let sp = split_of(&["a1", "a2"], &["b1", "b2"], &[], &[]);
        let part = sim_partition(&c4, &sp);
        let q = quotient(&c4, &part, 0);
        assert_eq!(q.graph.vertex_count(), 3);
        assert!(q.graph.has_edge("a1", "@1"));
        assert!(q.graph.has_edge("a2", "@1"));
        assert!(!q.graph.has_edge("a1", "a2"));
    }
}
