//! Ground-truth brute force: exhaustive representation enumeration and
//! seeded random instance generators for property testing.
//!
//! The enumerator is deliberately independent of the split-decomposition
//! engine; it backtracks over endpoint placements directly from the
//! alternation semantics, so the two can audit each other.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::Graph;
use crate::word::CircularWord;

pub const DEFAULT_ENUM_BOUND: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {n} vertices, oracle bound is {bound}")]
    TooLarge { n: usize, bound: usize },
}

/// SplitMix64: the 64-bit shift-xor-multiply generator from Steele et al.,
/// `nextSeed = seed + 0x9E3779B97F4A7C15` followed by two xor-shift-multiply
/// mixing steps. Chosen because it is tiny, well documented, and trivially
/// reproducible in any language, which keeps generated instances portable.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-enough value in `0..n` via modulo; documented so instances
    /// can be regenerated exactly elsewhere.
    pub fn next_below(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        (self.next_u64() % n as u64) as usize
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.next_below(i + 1);
            items.swap(i, j);
        }
    }
}

/// Backtracking search over endpoint placements. Vertices are placed one at
/// a time in `order`; both endpoints of the next vertex are inserted into
/// every pair of gaps of the current circular word, pruning any placement
/// whose alternation with an already-placed vertex disagrees with the graph.
/// Calls `found` with each complete placement (rotation duplicates included;
/// callers dedup by canonical form). Returns false if `found` aborted.
pub(crate) fn backtrack_words(
    g: &Graph,
    order: &[usize],
    found: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let n = order.len();
    if n == 0 {
        return found(&[]);
    }
    let mut word: Vec<usize> = Vec::with_capacity(2 * n);
    word.push(order[0]);
    word.push(order[0]);
    rec(g, order, 1, &mut word, found)
}

fn rec(
    g: &Graph,
    order: &[usize],
    k: usize,
    word: &mut Vec<usize>,
    found: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if k == order.len() {
        return found(word);
    }
    let v = order[k];
    let len = word.len();
    // insert first endpoint at slot i, second at slot j of the extended word
    for i in 0..=len {
        for j in i + 1..=len + 1 {
            word.insert(i, v);
            word.insert(j, v);
            if placement_ok(g, word, v) {
                if !rec(g, order, k + 1, word, found) {
                    word.remove(j);
                    word.remove(i);
                    return false;
                }
            }
            word.remove(j);
            word.remove(i);
        }
    }
    true
}

fn placement_ok(g: &Graph, word: &[usize], v: usize) -> bool {
    let (mut p1, mut p2) = (usize::MAX, usize::MAX);
    for (p, &s) in word.iter().enumerate() {
        if s == v {
            if p1 == usize::MAX {
                p1 = p;
            } else {
                p2 = p;
            }
        }
    }
    let mut checked = HashSet::new();
    for &u in word {
        if u == v || !checked.insert(u) {
            continue;
        }
        let (mut q1, mut q2) = (usize::MAX, usize::MAX);
        for (p, &s) in word.iter().enumerate() {
            if s == u {
                if q1 == usize::MAX {
                    q1 = p;
                } else {
                    q2 = p;
                }
            }
        }
        let inside = |p: usize| p1 < p && p < p2;
        let alternates = inside(q1) != inside(q2);
        if alternates != g.has_edge_idx(u, v) {
            return false;
        }
    }
    true
}

fn word_from_indices(g: &Graph, idxs: &[usize]) -> CircularWord {
    CircularWord::parse(idxs.iter().map(|&i| g.label(i).to_string())).unwrap()
}

/// Vertex order used by the oracle: descending degree, insertion order on ties.
fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.adj_idx(v).len()));
    order
}

/// All realizing circular words of `g` up to rotation, sorted by canonical
/// form. Empty output means `g` is not a circle graph (the empty graph has
/// the empty word as its single representation).
pub fn enumerate_representations(g: &Graph, bound: usize) -> Result<Vec<CircularWord>, OracleError> {
    let n = g.vertex_count();
    if n > bound {
        return Err(OracleError::TooLarge { n, bound });
    }
    let order = degree_order(g);
    let mut seen: HashSet<Vec<String>> = HashSet::new();
    let mut out: Vec<(Vec<String>, CircularWord)> = Vec::new();
    backtrack_words(g, &order, &mut |idxs| {
        let w = word_from_indices(g, idxs);
        debug_assert!(w.realizes(g));
        let canon = w.canonical_form();
        if seen.insert(canon.clone()) {
            out.push((canon, w));
        }
        true
    });
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, w)| w).collect())
}

/// Brute-force extension check: the first enumerated representation whose
/// induced subword on the pre-drawn symbols is a rotation of `partial`.
pub fn oracle_extend(
    g: &Graph,
    partial: &CircularWord,
    bound: usize,
) -> Result<Option<CircularWord>, OracleError> {
    let reps = enumerate_representations(g, bound)?;
    let pre: Vec<&str> = partial.symbols();
    Ok(reps.into_iter().find(|w| {
        pre.iter().all(|s| w.contains(s))
            && w.induced_subword(pre.iter().copied()).unwrap().circular_eq(partial)
    }))
}

fn auto_label(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("v{i}")
    }
}

/// Uniformly shuffles the 2n endpoint tokens into a circular word and reads
/// the graph off by alternation. Deterministic per seed.
pub fn random_circle_graph(n: usize, seed: u64) -> (Graph, CircularWord) {
    assert!(n >= 1);
    let mut rng = SplitMix64::new(seed);
    let mut tokens: Vec<usize> = (0..n).flat_map(|i| [i, i]).collect();
    rng.shuffle(&mut tokens);
    let word = CircularWord::parse(tokens.iter().map(|&i| auto_label(i))).unwrap();
    let labels: Vec<String> = (0..n).map(auto_label).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if word.alternates(&auto_label(i), &auto_label(j)).unwrap() {
                edges.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    let g = Graph::build(labels, edges).unwrap();
    debug_assert!(word.realizes(&g));
    (g, word)
}

/// Iteratively composes random circle graphs by marker substitution: a host
/// vertex `v` with word `v t v t̂` is replaced by a piece `v' s v' ŝ`,
/// giving `t s t̂ ŝ` and the complete-bipartite join of the two
/// neighborhoods. Prime chunks of the result stay at most `max_prime`
/// vertices, and the returned witness word realizes the returned graph.
pub fn random_split_composed_graph(
    pieces: usize,
    max_prime: usize,
    seed: u64,
) -> (Graph, CircularWord) {
    assert!(pieces >= 1);
    let max_prime = max_prime.max(3);
    let mut rng = SplitMix64::new(seed);
    let piece_size = |rng: &mut SplitMix64| 3 + rng.next_below(max_prime - 2);

    // host piece
    let (mut tokens, mut next_id) = fresh_piece(&mut rng, piece_size(&mut rng), 0);
    for _ in 1..pieces {
        // pick a host vertex with at least one crossing to keep things connected
        let ids: Vec<u64> = distinct_ids(&tokens);
        let mut host = 0;
        for attempt in 0..ids.len() {
            let cand = ids[(rng.next_below(ids.len()) + attempt) % ids.len()];
            if crosses_something(&tokens, cand) {
                host = cand;
                break;
            }
        }
        let (piece, next) = fresh_piece(&mut rng, piece_size(&mut rng), next_id);
        next_id = next;
        // rotate piece so a crossing-active vertex is its marker
        let pids = distinct_ids(&piece);
        let mut marker = pids[0];
        for attempt in 0..pids.len() {
            let cand = pids[(rng.next_below(pids.len()) + attempt) % pids.len()];
            if crosses_something(&piece, cand) {
                marker = cand;
                break;
            }
        }
        tokens = substitute(&tokens, host, &piece, marker);
    }

    let word = CircularWord::parse(tokens.iter().map(|&i| format!("n{i}"))).unwrap();
    let syms: Vec<String> = word.symbols().iter().map(|s| s.to_string()).collect();
    let mut edges = Vec::new();
    for i in 0..syms.len() {
        for j in i + 1..syms.len() {
            if word.alternates(&syms[i], &syms[j]).unwrap() {
                edges.push((syms[i].clone(), syms[j].clone()));
            }
        }
    }
    let g = Graph::build(syms, edges).unwrap();
    debug_assert!(word.realizes(&g));
    (g, word)
}

fn fresh_piece(rng: &mut SplitMix64, size: usize, first_id: u64) -> (Vec<u64>, u64) {
    let mut tokens: Vec<u64> = (0..size as u64).flat_map(|i| [first_id + i, first_id + i]).collect();
    rng.shuffle(&mut tokens);
    (tokens, first_id + size as u64)
}

fn distinct_ids(tokens: &[u64]) -> Vec<u64> {
    let mut seen = HashSet::new();
    tokens.iter().copied().filter(|&t| seen.insert(t)).collect()
}

fn crosses_something(tokens: &[u64], v: u64) -> bool {
    let pos: Vec<usize> = tokens
        .iter()
        .enumerate()
        .filter(|(_, &t)| t == v)
        .map(|(i, _)| i)
        .collect();
    let (p1, p2) = (pos[0], pos[1]);
    let mut inside = HashSet::new();
    let mut outside = HashSet::new();
    for (i, &t) in tokens.iter().enumerate() {
        if t == v {
            continue;
        }
        if p1 < i && i < p2 {
            inside.insert(t);
        } else {
            outside.insert(t);
        }
    }
    inside.intersection(&outside).next().is_some()
}

/// Replace `host` in `base` (word `host t host t̂`) by `piece` minus its
/// `marker` (word `marker s marker ŝ`), concatenating `t s t̂ ŝ`.
fn substitute(base: &[u64], host: u64, piece: &[u64], marker: u64) -> Vec<u64> {
    let arcs = |tokens: &[u64], v: u64| -> (Vec<u64>, Vec<u64>) {
        let pos: Vec<usize> = tokens
            .iter()
            .enumerate()
            .filter(|(_, &t)| t == v)
            .map(|(i, _)| i)
            .collect();
        let (p1, p2) = (pos[0], pos[1]);
        let first = tokens[p1 + 1..p2].to_vec();
        let mut second = tokens[p2 + 1..].to_vec();
        second.extend_from_slice(&tokens[..p1]);
        (first, second)
    };
    let (t, t_hat) = arcs(base, host);
    let (s, s_hat) = arcs(piece, marker);
    let mut out = t;
    out.extend(s);
    out.extend(t_hat);
    out.extend(s_hat);
    out
}
