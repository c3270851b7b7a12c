//! JSON file formats and their conversions to the in-memory types.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{parse_polynomial, AlgebraError, Field, FieldSpec, MonomialIdeal, ParseError, Polynomial};
use crate::complex::{ComplexError, ComplexFile, Graph, GraphFile, SimplicialComplex};
use crate::generate::InstanceBundle;
use crate::ring_map::{AlgebraMap, IsoPair, MapError, Presentation};
use crate::structure::{RingKind, Structure};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FileError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("generator {text:?}: {source}")]
    Generator { text: String, source: ParseError },
    #[error("generator {0:?} is not a monomial with coefficient 1")]
    NotAMonomial(String),
    #[error("image of {variable:?}: {source}")]
    Image { variable: String, source: ParseError },
    #[error("no image given for variable {0:?}")]
    MissingImage(String),
    #[error("image given for unknown variable {0:?}")]
    UnknownImage(String),
}

/// `{"variables": [...], "generators": ["x1*x2", ...]}`; also the
/// presentation format inside map files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFile {
    pub variables: Vec<String>,
    pub generators: Vec<String>,
}

impl IdealFile {
    pub fn from_ideal(variables: &[String], ideal: &MonomialIdeal) -> Self {
        let field = Field::Rational;
        let generators = ideal
            .generators()
            .iter()
            .map(|g| {
                Polynomial::monomial(field, variables.len(), g.clone(), field.one()).display(variables).to_string()
            })
            .collect();
        IdealFile { variables: variables.to_vec(), generators }
    }

    pub fn from_presentation(p: &Presentation) -> Self {
        Self::from_ideal(p.variables(), p.ideal())
    }

    pub fn ideal(&self) -> Result<MonomialIdeal, FileError> {
        let field = Field::Rational;
        let mut gens = Vec::with_capacity(self.generators.len());
        for text in &self.generators {
            let p = parse_polynomial(text, &self.variables, field)
                .map_err(|source| FileError::Generator { text: text.clone(), source })?;
            let mut terms = p.terms();
            match (terms.next(), terms.next()) {
                (Some((m, c)), None) if c.is_one() => gens.push(m.clone()),
                _ => return Err(FileError::NotAMonomial(text.clone())),
            }
        }
        Ok(MonomialIdeal::new(self.variables.len(), gens)?)
    }

    pub fn presentation(&self, field: Field) -> Result<Presentation, FileError> {
        Ok(Presentation::new(field, self.variables.clone(), self.ideal()?)?)
    }
}

/// Map file: field, both presentations, and images of both maps keyed by variable name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFile {
    pub field: FieldSpec,
    pub source: IdealFile,
    pub target: IdealFile,
    pub images: IndexMap<String, String>,
    pub inverse_images: IndexMap<String, String>,
}

fn parse_images(
    src: &Presentation,
    tgt: &Presentation,
    images: &IndexMap<String, String>,
) -> Result<AlgebraMap, FileError> {
    if let Some(k) = images.keys().find(|k| !src.variables().contains(k)) {
        return Err(FileError::UnknownImage(k.clone()));
    }
    let polys = src
        .variables()
        .iter()
        .map(|v| {
            let text = images.get(v).ok_or_else(|| FileError::MissingImage(v.clone()))?;
            tgt.parse(text).map_err(|source| FileError::Image { variable: v.clone(), source })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AlgebraMap::new(src.clone(), tgt.clone(), polys)?)
}

impl MapFile {
    /// The pair described by the file; `field` overrides the file's own field.
    pub fn to_pair(&self, field: Option<Field>) -> Result<IsoPair, FileError> {
        let field = match field {
            Some(f) => f,
            None => self.field.resolve()?,
        };
        let src = self.source.presentation(field)?;
        let tgt = self.target.presentation(field)?;
        let forward = parse_images(&src, &tgt, &self.images)?;
        let backward = parse_images(&tgt, &src, &self.inverse_images)?;
        Ok(IsoPair::new(forward, backward)?)
    }

    pub fn from_pair(pair: &IsoPair) -> Self {
        let named = |map: &AlgebraMap| -> IndexMap<String, String> {
            map.source().variables().iter().cloned().zip(map.image_strings()).collect()
        };
        MapFile {
            field: pair.source().field().into(),
            source: IdealFile::from_presentation(pair.source()),
            target: IdealFile::from_presentation(pair.target()),
            images: named(pair.forward()),
            inverse_images: named(pair.backward()),
        }
    }
}

/// A complex file or a graph file, told apart by their `facets` / `edges` keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StructureFile {
    Complex(ComplexFile),
    Graph(GraphFile),
}

impl StructureFile {
    pub fn load(&self) -> Result<Structure, FileError> {
        Ok(match self {
            StructureFile::Complex(c) => Structure::Complex(SimplicialComplex::try_from(c)?),
            StructureFile::Graph(g) => Structure::Graph(Graph::try_from(g)?),
        })
    }
}

impl From<&Structure> for StructureFile {
    fn from(s: &Structure) -> Self {
        match s {
            Structure::Complex(c) => StructureFile::Complex(c.into()),
            Structure::Graph(g) => StructureFile::Graph(g.into()),
        }
    }
}

/// Generated instance: both structures, the map file, the ground-truth
/// bijection by name, the seed and the scrambler trace.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BundleFile {
    pub kind: RingKind,
    pub field: FieldSpec,
    pub seed: u64,
    pub n: usize,
    pub source: StructureFile,
    pub target: StructureFile,
    pub map: MapFile,
    pub ground_truth: IndexMap<String, String>,
    pub trace: Vec<serde_json::Value>,
}

impl From<&InstanceBundle> for BundleFile {
    fn from(b: &InstanceBundle) -> Self {
        let src = b.source.vertices();
        let tgt = b.target.vertices();
        BundleFile {
            kind: b.kind,
            field: b.field().into(),
            seed: b.seed,
            n: b.n(),
            source: (&b.source).into(),
            target: (&b.target).into(),
            map: MapFile::from_pair(&b.pair),
            ground_truth: (0..b.n()).map(|i| (src[i].clone(), tgt[b.sigma.apply(i)].clone())).collect(),
            trace: b.trace.iter().map(|op| op.to_json(tgt)).collect(),
        }
    }
}

impl BundleFile {
    pub fn structures(&self) -> Result<(Structure, Structure), FileError> {
        Ok((self.source.load()?, self.target.load()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate_bundle, GenParams};

    #[test]
    fn ideal_file_round_trip() {
        let f: IdealFile =
            serde_json::from_str(r#"{"variables": ["a", "b", "c"], "generators": ["b*a", "c*b"]}"#).unwrap();
        let i = f.ideal().unwrap();
        assert_eq!(i.supports(), vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(IdealFile::from_ideal(&f.variables, &i).generators, vec!["a*b", "b*c"]);
        let bad = IdealFile { variables: vec!["a".into()], generators: vec!["2*a".into()] };
        assert!(matches!(bad.ideal(), Err(FileError::NotAMonomial(_))));
        let sq = IdealFile { variables: vec!["a".into()], generators: vec!["a^2".into()] };
        assert!(matches!(sq.ideal(), Err(FileError::Algebra(AlgebraError::NotSquareFree))));
    }

    #[test]
    fn map_file_round_trip_and_errors() {
        let b = generate_bundle(&GenParams::new(5, RingKind::StanleyReisner, 4, 17)).unwrap();
        let mf = MapFile::from_pair(&b.pair);
        let text = serde_json::to_string(&mf).unwrap();
        let back: MapFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_pair(None).unwrap(), b.pair);

        let mut missing = back.clone();
        missing.images.shift_remove("x1");
        assert_eq!(missing.to_pair(None).unwrap_err(), FileError::MissingImage("x1".into()));
        let mut unknown = back.clone();
        unknown.images.insert("x1".into(), "y1 + q".into());
        assert!(matches!(unknown.to_pair(None), Err(FileError::Image { .. })));
    }

    #[test]
    fn field_spec_forms() {
        let text = r#"{"field": {"prime": 7}, "source": {"variables": ["x1"], "generators": []},
            "target": {"variables": ["y1"], "generators": []}, "images": {"x1": "3*y1"}, "inverse_images": {"y1": "5*x1"}}"#;
        let mf: MapFile = serde_json::from_str(text).unwrap();
        let p = mf.to_pair(None).unwrap();
        assert_eq!(p.source().field(), Field::prime(7).unwrap());
        let q = mf.to_pair(Some(Field::Rational)).unwrap();
        assert_eq!(q.forward().image_strings(), vec!["3*y1"]);
    }

    #[test]
    fn bundle_file_is_stable() {
        let b = generate_bundle(&GenParams::new(6, RingKind::Edge, 4, 7)).unwrap();
        let f = BundleFile::from(&b);
        let text = serde_json::to_string_pretty(&f).unwrap();
        let back: BundleFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back, f);
        let (s, t) = back.structures().unwrap();
        assert_eq!((s, t), (b.source, b.target));
    }
}
