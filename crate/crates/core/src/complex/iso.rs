use std::collections::HashSet;

use super::{Bijection, ComplexError, Graph, SimplicialComplex};

/// Vertex limit for exhaustive isomorphism search.
pub const MAX_BRUTE_FORCE: usize = 10;

fn canonical(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = sets
        .iter()
        .map(|s| {
            let mut s = s.clone();
            s.sort_unstable();
            s
        })
        .collect();
    v.sort();
    v
}

fn maps_onto(sets1: &[Vec<usize>], sets2: &[Vec<usize>], psi: &Bijection) -> bool {
    let mut image: Vec<Vec<usize>> = sets1.iter().map(|s| psi.map_set(s)).collect();
    image.sort();
    image == canonical(sets2)
}

/// True iff `psi` carries the facets of `a` exactly onto the facets of `b`.
pub fn is_isomorphism(a: &SimplicialComplex, b: &SimplicialComplex, psi: &Bijection) -> Result<bool, ComplexError> {
    if a.n() != b.n() {
        return Err(ComplexError::SizeMismatch(a.n(), b.n()));
    }
    if psi.len() != a.n() {
        return Err(ComplexError::SizeMismatch(psi.len(), a.n()));
    }
    Ok(maps_onto(a.facets(), b.facets(), psi))
}

/// True iff `psi` carries the edges of `a` exactly onto the edges of `b`.
pub fn is_graph_isomorphism(a: &Graph, b: &Graph, psi: &Bijection) -> Result<bool, ComplexError> {
    if a.n() != b.n() {
        return Err(ComplexError::SizeMismatch(a.n(), b.n()));
    }
    if psi.len() != a.n() {
        return Err(ComplexError::SizeMismatch(psi.len(), a.n()));
    }
    Ok(maps_onto(&a.edge_sets(), &b.edge_sets(), psi))
}

/// Lexicographically first isomorphism of complexes, if any, by exhaustive search.
pub fn brute_force_iso(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<Option<Bijection>, ComplexError> {
    search(a.n(), b.n(), a.facets(), b.facets())
}

/// Lexicographically first isomorphism of graphs, if any, by exhaustive search.
pub fn brute_force_graph_iso(a: &Graph, b: &Graph) -> Result<Option<Bijection>, ComplexError> {
    search(a.n(), b.n(), &a.edge_sets(), &b.edge_sets())
}

/// Permutations are tried in lexicographic order. Partial assignments are cut
/// as soon as a set whose vertices are all assigned maps outside `sets2`, and
/// vertices are only matched to vertices with the same incidence profile;
/// neither cut removes an isomorphism, so the first hit is the lex-first one.
fn search(n: usize, m: usize, sets1: &[Vec<usize>], sets2: &[Vec<usize>]) -> Result<Option<Bijection>, ComplexError> {
    if n != m {
        return Err(ComplexError::SizeMismatch(n, m));
    }
    if n > MAX_BRUTE_FORCE {
        return Err(ComplexError::TooLarge { n, limit: MAX_BRUTE_FORCE });
    }
    let sets1 = canonical(sets1);
    let sets2 = canonical(sets2);
    let mut sizes1: Vec<usize> = sets1.iter().map(Vec::len).collect();
    let mut sizes2: Vec<usize> = sets2.iter().map(Vec::len).collect();
    sizes1.sort_unstable();
    sizes2.sort_unstable();
    if sizes1 != sizes2 {
        return Ok(None);
    }
    let profile = |sets: &[Vec<usize>], v: usize| {
        let mut p: Vec<usize> = sets.iter().filter(|s| s.contains(&v)).map(Vec::len).collect();
        p.sort_unstable();
        p
    };
    let prof1: Vec<Vec<usize>> = (0..n).map(|v| profile(&sets1, v)).collect();
    let prof2: Vec<Vec<usize>> = (0..n).map(|v| profile(&sets2, v)).collect();
    // sets of `sets1` whose largest vertex is v, checked once v is assigned
    let mut closing: Vec<Vec<&Vec<usize>>> = vec![Vec::new(); n];
    for s in &sets1 {
        if let Some(&top) = s.last() {
            closing[top].push(s);
        }
    }
    let targets: HashSet<&Vec<usize>> = sets2.iter().collect();

    struct State<'a> {
        n: usize,
        assign: Vec<usize>,
        used: Vec<bool>,
        prof1: &'a [Vec<usize>],
        prof2: &'a [Vec<usize>],
        closing: &'a [Vec<&'a Vec<usize>>],
        targets: &'a HashSet<&'a Vec<usize>>,
    }

    fn go(st: &mut State<'_>, v: usize) -> bool {
        if v == st.n {
            return true;
        }
        for w in 0..st.n {
            if st.used[w] || st.prof1[v] != st.prof2[w] {
                continue;
            }
            st.assign[v] = w;
            let ok = st.closing[v].iter().all(|s| {
                let mut img: Vec<usize> = s.iter().map(|&i| st.assign[i]).collect();
                img.sort_unstable();
                st.targets.contains(&img)
            });
            if !ok {
                continue;
            }
            st.used[w] = true;
            if go(st, v + 1) {
                return true;
            }
            st.used[w] = false;
        }
        false
    }

    let mut st = State {
        n,
        assign: vec![0; n],
        used: vec![false; n],
        prof1: &prof1,
        prof2: &prof2,
        closing: &closing,
        targets: &targets,
    };
    if go(&mut st, 0) {
        Ok(Some(Bijection::new(st.assign).expect("search assigns a permutation")))
    } else {
        Ok(None)
    }
}
