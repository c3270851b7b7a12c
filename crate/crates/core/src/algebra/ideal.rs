use super::monomial::Monomial;
use super::AlgebraError;

/// An ideal generated by square-free monomials, stored as its minimal
/// generating set. Generators are kept in a canonical order, so equal ideals
/// compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn empty(nvars: usize) -> Self {
        MonomialIdeal { nvars, generators: Vec::new() }
    }

    /// Minimalizes the given generators: duplicates and generators divisible
    /// by another generator are dropped.
    pub fn new<I: IntoIterator<Item = Monomial>>(nvars: usize, generators: I) -> Result<Self, AlgebraError> {
        let mut gens: Vec<Monomial> = Vec::new();
        for g in generators {
            if g.is_one() {
                return Err(AlgebraError::UnitGenerator);
            }
            if !g.is_square_free() {
                return Err(AlgebraError::NotSquareFree);
            }
            if g.min_nvars() > nvars {
                return Err(AlgebraError::VariableCountMismatch { expected: nvars, found: g.min_nvars() });
            }
            gens.push(g);
        }
        gens.sort();
        gens.dedup();
        // ascending degree: a divisor always precedes its multiples
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|h| h.divides(&g)) {
                minimal.push(g);
            }
        }
        // presentation order: by degree, then x1*x2 before x1*x3 before x2*x3
        minimal.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        Ok(MonomialIdeal { nvars, generators: minimal })
    }

    pub fn from_supports<I, S>(nvars: usize, supports: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = usize>,
    {
        Self::new(nvars, supports.into_iter().map(Monomial::from_support))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn supports(&self) -> Vec<Vec<usize>> {
        self.generators.iter().map(Monomial::support).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Membership of a monomial: it lies in the ideal iff some generator divides it.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Smallest generator degree, `None` for the zero ideal.
    pub fn min_degree(&self) -> Option<u32> {
        self.generators.iter().map(Monomial::degree).min()
    }

    /// True when `x_var` divides some generator.
    pub fn involves(&self, var: usize) -> bool {
        self.generators.iter().any(|g| g.exponent(var) > 0)
    }

    /// Image under a variable renaming (`map[i]` is the new index of `x_i`).
    pub fn relabel(&self, map: &[usize], nvars: usize) -> Result<Self, AlgebraError> {
        let map: Vec<Option<usize>> = map.iter().map(|&i| Some(i)).collect();
        Self::new(nvars, self.generators.iter().map(|g| g.reindex(&map).expect("relabeling covers every variable")))
    }
}
