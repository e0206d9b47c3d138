//! Canonical labelings by colour refinement with backtracking.
//!
//! Two graphs receive equal certificates exactly when they are isomorphic.
//! The search individualizes one vertex of the first smallest non-singleton
//! colour class at a time, refines, and keeps the lexicographically smallest
//! leaf certificate. Branches whose chosen vertex is interchangeable with an
//! already-tried sibling (the transposition is an automorphism) are skipped,
//! which collapses the blow-up and empty/complete cases. Adequate for the
//! orders this crate searches (n <= 16).

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Packed label-invariant fingerprint: the order followed by the
/// upper-triangle bits of the canonically relabeled adjacency matrix in
/// column-major order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Certificate(Vec<u64>);

/// Result of canonization: the relabeling that was applied (`relabeling[old]
/// = new`), the relabeled graph, and its certificate.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub relabeling: Vec<usize>,
    pub graph: Graph,
    pub certificate: Certificate,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    if n == 0 {
        return CanonicalForm {
            relabeling: Vec::new(),
            graph: g.clone(),
            certificate: Certificate(vec![0]),
        };
    }
    let mut best: Option<(Certificate, Vec<usize>)> = None;
    search(g, vec![0; n], &mut best);
    let (certificate, relabeling) = best.expect("at least one leaf labeling");
    let graph = g.relabeled(&relabeling);
    CanonicalForm {
        relabeling,
        graph,
        certificate,
    }
}

/// Shorthand when only the fingerprint is needed.
pub fn certificate(g: &Graph) -> Certificate {
    canonical_form(g).certificate
}

fn search(g: &Graph, mut colors: Vec<u32>, best: &mut Option<(Certificate, Vec<usize>)>) {
    refine(g, &mut colors);
    let n = g.n();

    // locate the first smallest non-singleton class
    let mut class_size = std::collections::BTreeMap::new();
    for &c in &colors {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    let target = class_size
        .iter()
        .filter(|(_, &s)| s > 1)
        .min_by_key(|&(&c, &s)| (s, c))
        .map(|(&c, _)| c);

    let Some(target) = target else {
        // discrete: colors are a permutation
        let mut relabeling = vec![0usize; n];
        for (v, &c) in colors.iter().enumerate() {
            relabeling[v] = c as usize;
        }
        let cert = certificate_under(g, &relabeling);
        if best.as_ref().is_none_or(|(b, _)| cert < *b) {
            *best = Some((cert, relabeling));
        }
        return;
    };

    let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&u| swap_is_automorphism(g, u, v)) {
            continue;
        }
        tried.push(v);
        let mut child = colors.clone();
        child[v] = u32::MAX; // unique, refined away immediately
        search(g, child, best);
    }
}

/// Is the transposition (u v) an automorphism?
fn swap_is_automorphism(g: &Graph, u: usize, v: usize) -> bool {
    let mut mask = VertexSet::singleton(u);
    mask.insert(v);
    (*g.neighbors(u)).minus(mask) == (*g.neighbors(v)).minus(mask)
}

/// Iterated colour refinement: the new colour of a vertex is determined by
/// its old colour and the multiset of its neighbours' old colours. Purely
/// label-invariant.
fn refine(g: &Graph, colors: &mut Vec<u32>) {
    let n = g.n();
    loop {
        let mut keys: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        keys.sort();
        let mut next = vec![0u32; n];
        let mut color = 0u32;
        for i in 0..n {
            if i > 0 && (keys[i].0, &keys[i].1) != (keys[i - 1].0, &keys[i - 1].1) {
                color += 1;
            }
            next[keys[i].2] = color;
        }
        let stable = (0..n).all(|v| {
            (0..n).all(|w| (colors[v] == colors[w]) == (next[v] == next[w]))
        });
        *colors = next;
        if stable {
            return;
        }
    }
}

fn certificate_under(g: &Graph, relabeling: &[usize]) -> Certificate {
    let n = g.n();
    let mut inverse = vec![0usize; n];
    for (old, &new) in relabeling.iter().enumerate() {
        inverse[new] = old;
    }
    let mut words = vec![n as u64];
    let mut acc = 0u64;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc <<= 1;
            if g.has_edge(inverse[u], inverse[v]) {
                acc |= 1;
            }
            filled += 1;
            if filled == 64 {
                words.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        acc <<= 64 - filled;
        words.push(acc);
    }
    Certificate(words)
}

/// Exhaustive permutation isomorphism test. Deliberately naive; serves as
/// the independent oracle for the refinement code on small orders.
pub fn are_isomorphic_bruteforce(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.n();
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    permute_check(a, b, &mut perm, 0)
}

fn permute_check(a: &Graph, b: &Graph, perm: &mut Vec<usize>, k: usize) -> bool {
    let n = a.n();
    if k == n {
        return (0..n).all(|u| (u + 1..n).all(|v| a.has_edge(u, v) == b.has_edge(perm[u], perm[v])));
    }
    for i in k..n {
        perm.swap(k, i);
        // partial consistency against already-placed vertices
        let ok = (0..k).all(|u| a.has_edge(u, k) == b.has_edge(perm[u], perm[k]));
        if ok && permute_check(a, b, perm, k + 1) {
            return true;
        }
        perm.swap(k, i);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.random_range(0..=i);
            p.swap(i, j);
        }
        p
    }

    #[test]
    fn permuted_cycles_share_certificates() {
        let c5 = Graph::cycle(5).unwrap();
        let shuffled = c5.relabeled(&[3, 0, 4, 1, 2]);
        assert_eq!(certificate(&c5), certificate(&shuffled));
        assert_ne!(
            certificate(&c5),
            certificate(&Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap())
        );
    }

    #[test]
    fn canonical_graph_is_isomorphic_relabeling() {
        let g = Graph::from_edges(6, &[(0, 2), (2, 4), (4, 0), (1, 3), (3, 5)]).unwrap();
        let canon = canonical_form(&g);
        assert_eq!(canon.graph, g.relabeled(&canon.relabeling));
        assert_eq!(certificate(&canon.graph), canon.certificate);
    }

    #[test]
    fn highly_symmetric_orders_finish() {
        // Cases where refinement alone never splits anything.
        for n in [8usize, 12, 16] {
            let e = Graph::empty(n).unwrap();
            let k = Graph::complete(n).unwrap();
            assert_eq!(certificate(&e), certificate(&e.relabeled(&random_permutation(&mut rand_chacha::ChaCha8Rng::seed_from_u64(n as u64), n))));
            assert_ne!(certificate(&e), certificate(&k));
        }
        let pet = petersen();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let cert = certificate(&pet);
        for _ in 0..5 {
            let p = random_permutation(&mut rng, 10);
            assert_eq!(certificate(&pet.relabeled(&p)), cert);
        }
    }

    fn petersen() -> Graph {
        Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            ],
        )
        .unwrap()
    }

    #[test]
    fn agrees_with_bruteforce_on_small_orders() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..120 {
            let n = rng.random_range(1..=7);
            let a = random_graph(&mut rng, n, 0.5);
            // permuted copy must match
            let p = random_permutation(&mut rng, n);
            let b = a.relabeled(&p);
            assert!(are_isomorphic_bruteforce(&a, &b));
            assert_eq!(certificate(&a), certificate(&b));
            // an independent random graph agrees both ways
            let c = random_graph(&mut rng, n, 0.5);
            assert_eq!(
                are_isomorphic_bruteforce(&a, &c),
                certificate(&a) == certificate(&c),
                "a={a:?} c={c:?}"
            );
        }
    }

    #[test]
    fn blowup_partners_do_not_break_canonization() {
        use crate::graph::BlowupSpec;
        let g = BlowupSpec::new(Graph::cycle(5).unwrap(), vec![2; 5]).unwrap().build().unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let cert = certificate(&g);
        for _ in 0..5 {
            let p = random_permutation(&mut rng, 10);
            assert_eq!(certificate(&g.relabeled(&p)), cert);
        }
    }
}
