//! Structured check reports shared by the map checks and the extraction pipeline.

use std::fmt;

use serde::Serialize;

/// A named stage of validation or extraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    Reconstruct,
    Lemma1,
    ConstantTerm,
    ZeroDimFacets,
    Lemma2,
    WellDefined,
    InversePair,
    Matrix,
    Transversal,
    Verify,
    Minimality,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::Reconstruct => "reconstruct",
            Stage::Lemma1 => "lemma1",
            Stage::ConstantTerm => "constant-term",
            Stage::ZeroDimFacets => "zero-dim-facets",
            Stage::Lemma2 => "lemma2",
            Stage::WellDefined => "well-defined",
            Stage::InversePair => "inverse-pair",
            Stage::Matrix => "matrix",
            Stage::Transversal => "transversal",
            Stage::Verify => "verify",
            Stage::Minimality => "minimality",
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which of the two maps of a pair a violation concerns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Forward,
    Backward,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// A source generator whose image does not reduce to zero.
    GeneratorNotPreserved {
        direction: Direction,
        generator: String,
        residue: String,
    },
    /// A composite `phi^-1(phi(v))` (or the reverse) that is not `v`.
    CompositionMismatch {
        direction: Direction,
        variable: String,
        found: String,
    },
    /// Nonzero constant term in the image of a zero divisor.
    ConstantOnZeroDivisor {
        direction: Direction,
        variable: String,
        constant: String,
    },
    /// Nonzero constant term in the image of a variable dividing no generator.
    ConstantTerm {
        direction: Direction,
        variable: String,
        constant: String,
    },
    DimensionMismatch {
        source: usize,
        target: usize,
    },
    EmptyLinearPart {
        direction: Direction,
        variable: String,
    },
    /// Entry of `A*B` or `B*A` differing from the identity.
    LinearInverse {
        product: String,
        row: usize,
        column: usize,
        value: String,
    },
    RowSum {
        row: usize,
        value: String,
    },
    ColumnSum {
        column: usize,
        value: String,
    },
    NoPerfectMatching {
        matched: usize,
        size: usize,
    },
    ZeroDimCountMismatch {
        source: usize,
        target: usize,
    },
    InvalidPresentation {
        direction: Direction,
        message: String,
    },
    /// A facet (or edge) whose image is not a facet (edge) of the target.
    FacetNotMapped {
        facet: Vec<String>,
        image: Vec<String>,
    },
    FacetNotHit {
        facet: Vec<String>,
    },
    NotMinimalGenerator {
        generator: String,
        image: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            GeneratorNotPreserved { direction, generator, residue } => {
                write!(f, "{direction} map sends generator {generator} to {residue}, not 0")
            }
            CompositionMismatch { direction, variable, found } => {
                write!(f, "{direction} round trip sends {variable} to {found}")
            }
            ConstantOnZeroDivisor { direction, variable, constant } => {
                write!(f, "{direction} image of zero divisor {variable} has constant term {constant}")
            }
            ConstantTerm { direction, variable, constant } => {
                write!(f, "{direction} image of {variable} has constant term {constant}")
            }
            DimensionMismatch { source, target } => {
                write!(f, "source has {source} variables, target has {target}")
            }
            EmptyLinearPart { direction, variable } => {
                write!(f, "{direction} image of {variable} has zero linear part")
            }
            LinearInverse { product, row, column, value } => {
                write!(f, "{product}[{row}][{column}] = {value} breaks the identity")
            }
            RowSum { row, value } => write!(f, "row {row} of M sums to {value}"),
            ColumnSum { column, value } => write!(f, "column {column} of M sums to {value}"),
            NoPerfectMatching { matched, size } => {
                write!(f, "support of M has a maximum matching of size {matched} < {size}")
            }
            ZeroDimCountMismatch { source, target } => {
                write!(f, "zero-dimensional facet counts differ: {source} vs {target}")
            }
            InvalidPresentation { direction, message } => write!(f, "{direction} side: {message}"),
            FacetNotMapped { facet, image } => {
                write!(f, "facet {{{}}} maps to {{{}}}, which is not a facet", facet.join(","), image.join(","))
            }
            FacetNotHit { facet } => write!(f, "facet {{{}}} is not an image", facet.join(",")),
            NotMinimalGenerator { generator, image } => {
                write!(f, "minimal generator {generator} maps to {image}, not a minimal generator")
            }
        }
    }
}

/// Outcome of one check: the stage and every violation found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub stage: Stage,
    pub passed: bool,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new(stage: Stage, violations: Vec<Violation>) -> Self {
        Report { stage, passed: violations.is_empty(), violations }
    }

    pub fn pass(stage: Stage) -> Self {
        Self::new(stage, Vec::new())
    }

    pub fn passed(&self) -> bool {
        self.passed
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            return write!(f, "{}: ok", self.stage);
        }
        write!(f, "{}: FAILED", self.stage)?;
        for v in &self.violations {
            write!(f, "\n  - {v}")?;
        }
        Ok(())
    }
}
