//! Quotient-ring presentations `K[x]/I`, K-algebra maps between them given by
//! variable images, and the hypothesis checks run before extraction.

mod checks;

use std::collections::HashSet;

use thiserror::Error;

use crate::algebra::{parse_polynomial, AlgebraError, Field, MonomialIdeal, ParseError, Polynomial, Scalar};

pub use checks::{
    check_inverse_pair, check_well_defined, constant_term_check, lemma1_check, lemma2_check, linear_parts,
    pair_well_defined, LinearPartData,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("ideal lives in {ideal} variables but {names} variable names were given")]
    IdealSize { ideal: usize, names: usize },
    #[error("duplicate variable name {0:?}")]
    DuplicateVariable(String),
    #[error("{expected} images required, {found} given")]
    Arity { expected: usize, found: usize },
    #[error("source and target use different coefficient fields ({0} vs {1})")]
    FieldMismatch(Field, Field),
    #[error("image {index} does not live in the target ring")]
    ImageRing { index: usize },
    #[error("maps do not chain: the inverse must go from the forward target back to the forward source")]
    NotChained,
}

/// `K[x_1..x_n] / I` with named variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    field: Field,
    variables: Vec<String>,
    ideal: MonomialIdeal,
}

impl Presentation {
    pub fn new(field: Field, variables: Vec<String>, ideal: MonomialIdeal) -> Result<Self, MapError> {
        if ideal.nvars() != variables.len() {
            return Err(MapError::IdealSize { ideal: ideal.nvars(), names: variables.len() });
        }
        let mut seen = HashSet::new();
        for v in &variables {
            if !seen.insert(v.as_str()) {
                return Err(MapError::DuplicateVariable(v.clone()));
            }
        }
        Ok(Presentation { field, variables, ideal })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn n(&self) -> usize {
        self.variables.len()
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::var(self.field, self.n(), i)
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial, ParseError> {
        parse_polynomial(text, &self.variables, self.field)
    }

    /// Prints a polynomial of this ring in the expression grammar.
    pub fn show(&self, p: &Polynomial) -> String {
        p.display(&self.variables).to_string()
    }

    /// Variables whose class is a zero divisor (they divide some generator).
    pub fn zero_divisor_variables(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.ideal.involves(i)).collect()
    }

    /// Same ring with a different coefficient field.
    pub fn with_field(&self, field: Field) -> Presentation {
        Presentation { field, ..self.clone() }
    }
}

/// A K-algebra map `source -> target`, determined by the images of the source
/// variables. Images are kept in normal form modulo the target ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraMap {
    source: Presentation,
    target: Presentation,
    images: Vec<Polynomial>,
}

impl AlgebraMap {
    pub fn new(source: Presentation, target: Presentation, images: Vec<Polynomial>) -> Result<Self, MapError> {
        if source.field != target.field {
            return Err(MapError::FieldMismatch(source.field, target.field));
        }
        if images.len() != source.n() {
            return Err(MapError::Arity { expected: source.n(), found: images.len() });
        }
        let mut normal = Vec::with_capacity(images.len());
        for (index, img) in images.iter().enumerate() {
            if img.field() != target.field || img.nvars() != target.n() {
                return Err(MapError::ImageRing { index });
            }
            normal.push(img.normal_form(&target.ideal)?);
        }
        Ok(AlgebraMap { source, target, images: normal })
    }

    /// Parses each image over the target ring.
    pub fn parse<S: AsRef<str>>(source: Presentation, target: Presentation, images: &[S]) -> Result<Self, MapError> {
        let polys = images.iter().map(|t| target.parse(t.as_ref())).collect::<Result<Vec<_>, _>>()?;
        Self::new(source, target, polys)
    }

    /// `x_i -> y_{perm[i]}`.
    pub fn relabeling(source: Presentation, target: Presentation, perm: &[usize]) -> Result<Self, MapError> {
        let images = perm.iter().map(|&j| target.var(j)).collect();
        Self::new(source, target, images)
    }

    pub fn identity(p: Presentation) -> Self {
        let images = (0..p.n()).map(|i| p.var(i)).collect();
        AlgebraMap { source: p.clone(), target: p, images }
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn target(&self) -> &Presentation {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    /// Image of an arbitrary source polynomial, in normal form.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial, MapError> {
        Ok(p.substitute(&self.images, &self.target.ideal)?)
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &AlgebraMap) -> Result<AlgebraMap, MapError> {
        if self.target != next.source {
            return Err(MapError::NotChained);
        }
        let images = self.images.iter().map(|f| next.apply(f)).collect::<Result<Vec<_>, _>>()?;
        AlgebraMap::new(self.source.clone(), next.target.clone(), images)
    }

    /// Images printed over the target variable names.
    pub fn image_strings(&self) -> Vec<String> {
        self.images.iter().map(|p| self.target.show(p)).collect()
    }

    pub fn with_images(&self, images: Vec<Polynomial>) -> Result<AlgebraMap, MapError> {
        AlgebraMap::new(self.source.clone(), self.target.clone(), images)
    }
}

/// A map together with its claimed inverse. That the two really are inverse
/// is checked by [`check_inverse_pair`], not assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoPair {
    forward: AlgebraMap,
    backward: AlgebraMap,
}

impl IsoPair {
    pub fn new(forward: AlgebraMap, backward: AlgebraMap) -> Result<Self, MapError> {
        if forward.source != backward.target || forward.target != backward.source {
            return Err(MapError::NotChained);
        }
        Ok(IsoPair { forward, backward })
    }

    pub fn identity(p: Presentation) -> Self {
        IsoPair { forward: AlgebraMap::identity(p.clone()), backward: AlgebraMap::identity(p) }
    }

    pub fn forward(&self) -> &AlgebraMap {
        &self.forward
    }

    pub fn backward(&self) -> &AlgebraMap {
        &self.backward
    }

    pub fn source(&self) -> &Presentation {
        &self.forward.source
    }

    pub fn target(&self) -> &Presentation {
        &self.forward.target
    }

    pub fn inverse(&self) -> IsoPair {
        IsoPair { forward: self.backward.clone(), backward: self.forward.clone() }
    }

    /// `next ∘ self`, with inverse `self⁻¹ ∘ next⁻¹`.
    pub fn then(&self, next: &IsoPair) -> Result<IsoPair, MapError> {
        let forward = self.forward.then(&next.forward)?;
        let backward = next.backward.then(&self.backward)?;
        IsoPair::new(forward, backward)
    }

    /// The same pair with a stripped set of variables on each side.
    ///
    /// `keep_source[k]` / `keep_target[k]` are the surviving variable indices.
    /// Generators touching a dropped variable are removed and terms of images
    /// containing a dropped variable are deleted; this is an isomorphic
    /// restatement only when every dropped variable is itself a generator.
    pub fn restrict(&self, keep_source: &[usize], keep_target: &[usize]) -> Result<IsoPair, MapError> {
        let src = restrict_presentation(self.source(), keep_source)?;
        let tgt = restrict_presentation(self.target(), keep_target)?;
        let fwd_map = index_map(self.target().n(), keep_target);
        let bwd_map = index_map(self.source().n(), keep_source);
        let fwd = keep_source.iter().map(|&i| self.forward.images[i].reindex(&fwd_map, keep_target.len())).collect();
        let bwd = keep_target.iter().map(|&j| self.backward.images[j].reindex(&bwd_map, keep_source.len())).collect();
        IsoPair::new(AlgebraMap::new(src.clone(), tgt.clone(), fwd)?, AlgebraMap::new(tgt, src, bwd)?)
    }
}

fn index_map(n: usize, keep: &[usize]) -> Vec<Option<usize>> {
    let mut map = vec![None; n];
    for (k, &i) in keep.iter().enumerate() {
        map[i] = Some(k);
    }
    map
}

fn restrict_presentation(p: &Presentation, keep: &[usize]) -> Result<Presentation, MapError> {
    let map = index_map(p.n(), keep);
    let gens = p.ideal.generators().iter().filter_map(|g| g.reindex(&map));
    let ideal = MonomialIdeal::new(keep.len(), gens)?;
    Presentation::new(p.field, keep.iter().map(|&i| p.variables[i].clone()).collect(), ideal)
}

/// Exact square-matrix product.
pub(crate) fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>], field: Field) -> Vec<Vec<Scalar>> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let inner = b.len();
    let mut out = vec![vec![field.zero(); m]; n];
    for i in 0..n {
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[k][j].is_zero() {
                    out[i][j] += &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}
