use std::collections::HashSet;

use super::{mask_of, ComplexError, Graph, SimplicialComplex, MAX_ENUMERATION_VERTICES};
use crate::algebra::{Monomial, MonomialIdeal};

fn guard(n: usize) -> Result<(), ComplexError> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(ComplexError::TooLarge { n, limit: MAX_ENUMERATION_VERTICES });
    }
    Ok(())
}

fn support_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

fn generator_name(g: &Monomial, names: &[String]) -> String {
    g.support().iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join("*")
}

/// Stanley-Reisner ideal: one generator per minimal non-face.
///
/// Candidates are generated level by level; a `k`-set is examined only when all
/// of its `(k-1)`-subsets are faces, so every non-face found is minimal.
pub fn stanley_reisner_ideal(complex: &SimplicialComplex) -> Result<MonomialIdeal, ComplexError> {
    let n = complex.n();
    guard(n)?;
    let facet_masks: Vec<u64> = complex.facets().iter().map(|f| mask_of(f)).collect();
    let is_face = |m: u64| facet_masks.iter().any(|&f| m & !f == 0);

    let mut minimal_nonfaces: Vec<u64> = Vec::new();
    let mut level: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
    while !level.is_empty() {
        let known: HashSet<u64> = level.iter().copied().collect();
        let mut next = Vec::new();
        for &face in &level {
            let top = 63 - face.leading_zeros() as usize;
            for v in top + 1..n {
                let cand = face | 1 << v;
                let all_subfaces = support_of(cand).into_iter().all(|u| known.contains(&(cand & !(1 << u))));
                if !all_subfaces {
                    continue;
                }
                if is_face(cand) {
                    next.push(cand);
                } else {
                    minimal_nonfaces.push(cand);
                }
            }
        }
        level = next;
    }
    Ok(MonomialIdeal::from_supports(n, minimal_nonfaces.into_iter().map(support_of))
        .expect("minimal non-faces are square-free and in range"))
}

/// Facet ideal: one generator per facet.
pub fn facet_ideal(complex: &SimplicialComplex) -> MonomialIdeal {
    MonomialIdeal::from_supports(complex.n(), complex.facets().iter().cloned())
        .expect("facets are square-free and in range")
}

/// Edge ideal: `x_i x_j` for every edge.
pub fn edge_ideal(graph: &Graph) -> MonomialIdeal {
    MonomialIdeal::from_supports(graph.n(), graph.edge_sets()).expect("edges are square-free and in range")
}

fn check_name_count(ideal: &MonomialIdeal, names: &[String]) -> Result<(), ComplexError> {
    if ideal.nvars() != names.len() {
        return Err(ComplexError::NameCountMismatch { ideal: ideal.nvars(), names: names.len() });
    }
    Ok(())
}

/// The complex whose Stanley-Reisner ideal is `ideal`: its facets are the
/// maximal vertex sets containing no generator support.
pub fn reconstruct_sr_complex(ideal: &MonomialIdeal, names: Vec<String>) -> Result<SimplicialComplex, ComplexError> {
    check_name_count(ideal, &names)?;
    let n = names.len();
    guard(n)?;
    if let Some(g) = ideal.generators().iter().find(|g| g.degree() < 2) {
        return Err(ComplexError::DegreeOneGenerator(generator_name(g, &names)));
    }
    let gens: Vec<u64> = ideal.generators().iter().map(|g| mask_of(&g.support())).collect();
    let mut facets = Vec::new();
    maximal_free_sets(0, n, 0, &gens, &mut facets);
    SimplicialComplex::new(names, facets.into_iter().map(support_of).collect())
}

fn contains_generator(set: u64, gens: &[u64]) -> bool {
    gens.iter().any(|&g| g & !set == 0)
}

/// Branch over vertices in index order. A vertex may be left out only if some
/// generator through it can still be completed by the current set plus the
/// undecided vertices; otherwise leaving it out can never yield a maximal set.
fn maximal_free_sets(v: usize, n: usize, current: u64, gens: &[u64], out: &mut Vec<u64>) {
    if v == n {
        let maximal = (0..n).all(|u| current >> u & 1 == 1 || contains_generator(current | 1 << u, gens));
        if maximal {
            out.push(current);
        }
        return;
    }
    let bit = 1u64 << v;
    let can_add = !contains_generator(current | bit, gens);
    if can_add {
        maximal_free_sets(v + 1, n, current | bit, gens, out);
    }
    let undecided = if v + 1 >= 64 { 0 } else { !0u64 << (v + 1) };
    let reachable = current | (undecided & ((1u64 << n) - 1));
    let blockable = gens.iter().any(|&g| g & bit != 0 && (g & !bit) & !reachable == 0);
    if !can_add || blockable {
        maximal_free_sets(v + 1, n, current, gens, out);
    }
}

/// The complex whose facet ideal is `ideal`. Every variable must occur in
/// some generator, since every vertex of a complex is a face.
pub fn reconstruct_facet_complex(ideal: &MonomialIdeal, names: Vec<String>) -> Result<SimplicialComplex, ComplexError> {
    check_name_count(ideal, &names)?;
    if let Some(v) = (0..names.len()).find(|&v| !ideal.involves(v)) {
        return Err(ComplexError::UncoveredVertex(names[v].clone()));
    }
    SimplicialComplex::new(names, ideal.supports())
}

/// The graph whose edge ideal is `ideal`; all generators must be quadratic.
pub fn reconstruct_graph(ideal: &MonomialIdeal, names: Vec<String>) -> Result<Graph, ComplexError> {
    check_name_count(ideal, &names)?;
    if let Some(g) = ideal.generators().iter().find(|g| g.degree() != 2) {
        return Err(ComplexError::NotQuadratic(generator_name(g, &names)));
    }
    Graph::new(names, ideal.supports().into_iter().map(|s| (s[0], s[1])).collect())
}

/// Faces are the subsets of facets; used only by tests as a transparent oracle.
#[cfg(test)]
pub(crate) fn minimal_nonfaces_by_enumeration(c: &SimplicialComplex) -> Vec<Vec<usize>> {
    let n = c.n();
    let mut out = Vec::new();
    for mask in 1u64..(1 << n) {
        let s = support_of(mask);
        if c.is_face(&s) {
            continue;
        }
        let minimal = s.iter().all(|&u| {
            let t: Vec<usize> = s.iter().copied().filter(|&w| w != u).collect();
            t.is_empty() || c.is_face(&t)
        });
        if minimal {
            out.push(s);
        }
    }
    out
}

#[cfg(test)]
use super::is_subset;

#[cfg(test)]
pub(crate) fn maximal_free_sets_by_enumeration(ideal: &MonomialIdeal) -> Vec<Vec<usize>> {
    let n = ideal.nvars();
    let free: Vec<Vec<usize>> =
        (0u64..(1 << n)).map(support_of).filter(|s| !ideal.supports().iter().any(|g| is_subset(g, s))).collect();
    let mut out: Vec<Vec<usize>> =
        free.iter().filter(|s| !free.iter().any(|t| t.len() > s.len() && is_subset(s, t))).cloned().collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::new(names(n), facets.iter().map(|f| f.to_vec()).collect()).unwrap()
    }

    fn ideal(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::from_supports(n, gens.iter().map(|g| g.to_vec())).unwrap()
    }

    #[test]
    fn sr_ideal_examples_match_enumeration() {
        let hollow = complex(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(minimal_nonfaces_by_enumeration(&hollow), vec![vec![0, 1, 2]]);
        assert_eq!(stanley_reisner_ideal(&hollow).unwrap(), ideal(3, &[&[0, 1, 2]]));

        let full = complex(3, &[&[0, 1, 2]]);
        assert!(stanley_reisner_ideal(&full).unwrap().is_empty());

        let c = complex(3, &[&[0, 2], &[1]]);
        assert_eq!(minimal_nonfaces_by_enumeration(&c), vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(stanley_reisner_ideal(&c).unwrap(), ideal(3, &[&[0, 1], &[1, 2]]));
    }

    #[test]
    fn facet_and_edge_ideal_examples() {
        assert_eq!(facet_ideal(&complex(3, &[&[0, 1], &[1, 2]])), ideal(3, &[&[0, 1], &[1, 2]]));
        assert_eq!(facet_ideal(&complex(3, &[&[0, 1, 2]])), ideal(3, &[&[0, 1, 2]]));
        let with_point = facet_ideal(&complex(3, &[&[0], &[1, 2]]));
        assert_eq!(with_point, ideal(3, &[&[0], &[1, 2]]));
        assert_eq!(with_point.min_degree(), Some(1));

        let path = Graph::new(names(3), vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(edge_ideal(&path), ideal(3, &[&[0, 1], &[1, 2]]));
        assert!(edge_ideal(&Graph::new(names(3), vec![]).unwrap()).is_empty());
        let star = Graph::new(names(4), vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(edge_ideal(&star), ideal(4, &[&[0, 1], &[0, 2], &[0, 3]]));
    }

    #[test]
    fn reconstruction_examples() {
        let hollow = reconstruct_sr_complex(&ideal(3, &[&[0, 1, 2]]), names(3)).unwrap();
        assert_eq!(hollow.facets(), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(maximal_free_sets_by_enumeration(&ideal(3, &[&[0, 1, 2]])), hollow.facets().to_vec());

        let full = reconstruct_sr_complex(&MonomialIdeal::empty(4), names(4)).unwrap();
        assert_eq!(full.facets(), &[vec![0, 1, 2, 3]]);

        let c = reconstruct_sr_complex(&ideal(3, &[&[0, 1], &[1, 2]]), names(3)).unwrap();
        assert_eq!(c.facets(), &[vec![0, 2], vec![1]]);

        assert!(matches!(
            reconstruct_sr_complex(&ideal(3, &[&[0], &[1, 2]]), names(3)),
            Err(ComplexError::DegreeOneGenerator(_))
        ));
        assert!(matches!(
            reconstruct_sr_complex(&ideal(3, &[&[0, 1]]), names(2)),
            Err(ComplexError::NameCountMismatch { .. })
        ));
    }

    #[test]
    fn facet_reconstruction_examples() {
        let c = reconstruct_facet_complex(&ideal(3, &[&[0, 1], &[1, 2]]), names(3)).unwrap();
        assert_eq!(c.facets(), &[vec![0, 1], vec![1, 2]]);
        let c = reconstruct_facet_complex(&ideal(3, &[&[0], &[1, 2]]), names(3)).unwrap();
        assert_eq!(c.facets(), &[vec![0], vec![1, 2]]);
        let c = reconstruct_facet_complex(&ideal(3, &[&[0, 1, 2]]), names(3)).unwrap();
        assert_eq!(c.facets(), &[vec![0, 1, 2]]);
        assert_eq!(
            reconstruct_facet_complex(&ideal(3, &[&[0, 1]]), names(3)),
            Err(ComplexError::UncoveredVertex("x3".into()))
        );
    }

    #[test]
    fn graph_reconstruction() {
        let g = reconstruct_graph(&ideal(4, &[&[0, 1], &[2, 3]]), names(4)).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (2, 3)]);
        assert!(matches!(reconstruct_graph(&ideal(3, &[&[0, 1, 2]]), names(3)), Err(ComplexError::NotQuadratic(_))));
    }

    #[test]
    fn size_guard() {
        let big = SimplicialComplex::simplex((0..26).map(|i| format!("v{i}")).collect()).unwrap();
        assert!(matches!(stanley_reisner_ideal(&big), Err(ComplexError::TooLarge { .. })));
        let ok = SimplicialComplex::simplex((0..25).map(|i| format!("v{i}")).collect()).unwrap();
        assert!(reconstruct_sr_complex(&MonomialIdeal::empty(25), ok.vertices().to_vec()).is_ok());
    }

    fn arb_complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::vec(0..n, 1..=n), 1..6)
                .prop_map(move |faces| SimplicialComplex::from_faces(names(n), faces).unwrap())
        })
    }

    proptest! {
        #[test]
        fn sr_ideal_matches_enumeration(c in arb_complex(7)) {
            let ideal = stanley_reisner_ideal(&c).unwrap();
            let expected = MonomialIdeal::from_supports(c.n(), minimal_nonfaces_by_enumeration(&c)).unwrap();
            prop_assert_eq!(&ideal, &expected);
            prop_assert!(ideal.min_degree().map_or(true, |d| d >= 2));
        }

        #[test]
        fn round_trips(c in arb_complex(8)) {
            let sr = stanley_reisner_ideal(&c).unwrap();
            prop_assert_eq!(&reconstruct_sr_complex(&sr, c.vertices().to_vec()).unwrap(), &c);
            prop_assert_eq!(maximal_free_sets_by_enumeration(&sr), c.facets().to_vec());
            let fi = facet_ideal(&c);
            prop_assert_eq!(&reconstruct_facet_complex(&fi, c.vertices().to_vec()).unwrap(), &c);
        }

        #[test]
        fn edge_ideal_is_facet_ideal_of_edges(n in 2usize..8, raw in proptest::collection::vec((0usize..8, 0usize..8), 0..12)) {
            let mut edges: Vec<(usize, usize)> = raw.into_iter()
                .map(|(a, b)| (a % n, b % n))
                .filter(|(a, b)| a != b)
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect();
            edges.sort();
            edges.dedup();
            let g = Graph::new(names(n), edges).unwrap();
            if let Ok(c) = g.edge_complex() {
                prop_assert_eq!(edge_ideal(&g), facet_ideal(&c));
            }
        }
    }
}
