//! Vertex bijections from ring isomorphisms.
//!
//! The pipeline validates an [`IsoPair`], forms the transversal matrix from
//! the linear parts, picks a transversal of nonzero entries by bipartite
//! matching, reads the vertex bijection off it and verifies the result
//! combinatorially.

use std::fmt;

use indexmap::IndexMap;
use serde::Serialize;

use crate::algebra::{Field, MonomialIdeal, Scalar};
use crate::complex::Bijection;
use crate::matching::maximum_matching;
use crate::report::{Direction, Report, Stage, Violation};
use crate::ring_map::{
    check_inverse_pair, constant_term_check, lemma1_check, lemma2_check, linear_parts, IsoPair, LinearPartData,
};
use crate::structure::{RingKind, Structure};

/// `m[i][j] = a[j][i] * b[i][j]`: rows follow target variables, columns source variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalMatrix {
    field: Field,
    entries: Vec<Vec<Scalar>>,
}

impl TransversalMatrix {
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn entries(&self) -> &[Vec<Scalar>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i][j]
    }

    pub fn row_sums(&self) -> Vec<Scalar> {
        self.entries.iter().map(|row| row.iter().fold(self.field.zero(), |acc, x| &acc + x)).collect()
    }

    pub fn column_sums(&self) -> Vec<Scalar> {
        (0..self.n()).map(|j| self.entries.iter().fold(self.field.zero(), |acc, row| &acc + &row[j])).collect()
    }

    /// Nonzero columns of each row.
    pub fn support(&self) -> Vec<Vec<usize>> {
        self.entries.iter().map(|row| (0..row.len()).filter(|&j| !row[j].is_zero()).collect()).collect()
    }
}

/// Builds the transversal matrix and checks that every row and column sums to one.
pub fn build_transversal_matrix(lp: &LinearPartData, field: Field) -> Result<TransversalMatrix, Report> {
    let n = lp.a.len();
    let square = lp.b.len() == n && lp.a.iter().chain(&lp.b).all(|r| r.len() == n);
    if !square {
        return Err(Report::new(Stage::Matrix, vec![Violation::DimensionMismatch { source: n, target: lp.b.len() }]));
    }
    let zero = field.zero();
    let entries: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let (a, b) = (&lp.a[j][i], &lp.b[i][j]);
                    if a.is_zero() || b.is_zero() {
                        zero.clone()
                    } else {
                        a * b
                    }
                })
                .collect()
        })
        .collect();
    let m = TransversalMatrix { field, entries };
    let mut v = Vec::new();
    for (i, s) in m.row_sums().into_iter().enumerate() {
        if !s.is_one() {
            v.push(Violation::RowSum { row: i + 1, value: s.to_string() });
        }
    }
    for (j, s) in m.column_sums().into_iter().enumerate() {
        if !s.is_one() {
            v.push(Violation::ColumnSum { column: j + 1, value: s.to_string() });
        }
    }
    if v.is_empty() {
        Ok(m)
    } else {
        Err(Report::new(Stage::Matrix, v))
    }
}

/// A permutation `cols` with `m[i][cols[i]] != 0` for every row `i`, found as a
/// perfect matching of the support.
pub fn find_nonzero_transversal(m: &TransversalMatrix) -> Result<Vec<usize>, Report> {
    let n = m.n();
    let matched = maximum_matching(&m.support(), n);
    let size = matched.iter().flatten().count();
    if size < n {
        return Err(Report::new(Stage::Transversal, vec![Violation::NoPerfectMatching { matched: size, size: n }]));
    }
    Ok(matched.into_iter().map(|c| c.expect("perfect matching")).collect())
}

/// Checks that `psi` carries the minimal generators of `source` bijectively
/// onto those of `target`.
pub fn verify_minimal_generators(
    source: &MonomialIdeal,
    target: &MonomialIdeal,
    psi: &Bijection,
    source_names: &[String],
    target_names: &[String],
) -> Report {
    let show = |s: &[usize], names: &[String]| s.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join("*");
    let targets = target.supports();
    let mut hit = vec![false; targets.len()];
    let mut v = Vec::new();
    for g in source.supports() {
        let image = psi.map_set(&g);
        match targets.iter().position(|t| *t == image) {
            Some(k) if !hit[k] => hit[k] = true,
            _ => v.push(Violation::NotMinimalGenerator {
                generator: show(&g, source_names),
                image: show(&image, target_names),
            }),
        }
    }
    for (k, t) in targets.iter().enumerate() {
        if !hit[k] {
            v.push(Violation::FacetNotHit { facet: t.iter().map(|&i| target_names[i].clone()).collect() });
        }
    }
    Report::new(Stage::Minimality, v)
}

/// A verified extraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractionResult {
    pub kind: RingKind,
    /// `psi.apply(i)` is the target vertex of source vertex `i`.
    pub bijection: Bijection,
    /// Transversal entries `(row, column)` of the matrix, 0-based, by row.
    pub transversal: Vec<(usize, usize)>,
    pub source_names: Vec<String>,
    pub target_names: Vec<String>,
    pub source: Structure,
    pub target: Structure,
    /// Every stage that ran, in order; all passed.
    pub reports: Vec<Report>,
    pub diagnostics: Vec<String>,
}

#[derive(Serialize)]
struct ResultJson<'a> {
    bijection: IndexMap<&'a str, &'a str>,
    transversal: Vec<[usize; 2]>,
    verified: bool,
    kind: RingKind,
    diagnostics: &'a [String],
}

impl ExtractionResult {
    /// Source-name to target-name pairs, in source order.
    pub fn named_bijection(&self) -> Vec<(&str, &str)> {
        (0..self.bijection.len())
            .map(|i| (self.source_names[i].as_str(), self.target_names[self.bijection.apply(i)].as_str()))
            .collect()
    }

    /// `{"bijection": {...}, "transversal": [[row, col], ...], "verified": true, "kind": ..., "diagnostics": [...]}`,
    /// indices 1-based.
    pub fn to_json(&self) -> serde_json::Value {
        let j = ResultJson {
            bijection: self.named_bijection().into_iter().collect(),
            transversal: self.transversal.iter().map(|&(r, c)| [r + 1, c + 1]).collect(),
            verified: true,
            kind: self.kind,
            diagnostics: &self.diagnostics,
        };
        serde_json::to_value(j).expect("plain data serializes")
    }
}

/// The stage at which extraction stopped, and every report produced up to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractionFailure {
    pub stage: Stage,
    pub reports: Vec<Report>,
}

impl ExtractionFailure {
    pub fn failing_report(&self) -> &Report {
        self.reports.last().expect("a failure carries its report")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "verified": false,
            "stage": self.stage,
            "reports": self.reports,
        })
    }
}

impl fmt::Display for ExtractionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "extraction failed at stage {}\n{}", self.stage, self.failing_report())
    }
}

impl std::error::Error for ExtractionFailure {}

struct Run {
    reports: Vec<Report>,
}

impl Run {
    fn record(&mut self, report: Report) -> Result<(), ExtractionFailure> {
        let passed = report.passed();
        let stage = report.stage;
        self.reports.push(report);
        if passed {
            Ok(())
        } else {
            Err(ExtractionFailure { stage, reports: std::mem::take(&mut self.reports) })
        }
    }
}

/// Runs the full pipeline on a pair `R/I -> S/J` of the given kind.
///
/// Stages, in order: reconstruct both structures; constant terms on zero
/// divisors; constant terms elsewhere; zero-dimensional facets (facet kind);
/// dimensions, linear parts and their inverse property; well-definedness;
/// the inverse property of the maps; the transversal matrix; the transversal;
/// combinatorial verification; generator minimality (facet and edge kinds).
pub fn extract_isomorphism(pair: &IsoPair, kind: RingKind) -> Result<ExtractionResult, ExtractionFailure> {
    let mut run = Run { reports: Vec::new() };
    let (src, tgt) = (pair.source(), pair.target());

    let mut bad = Vec::new();
    let s1 = Structure::reconstruct(kind, src.ideal(), src.variables().to_vec()).map_err(|e| {
        bad.push(Violation::InvalidPresentation { direction: Direction::Forward, message: e.to_string() })
    });
    let s2 = Structure::reconstruct(kind, tgt.ideal(), tgt.variables().to_vec()).map_err(|e| {
        bad.push(Violation::InvalidPresentation { direction: Direction::Backward, message: e.to_string() })
    });
    run.record(Report::new(Stage::Reconstruct, bad))?;
    let (s1, s2) = (s1.expect("checked"), s2.expect("checked"));

    run.record(lemma1_check(pair))?;
    run.record(constant_term_check(pair))?;

    // Singleton facets are generators of degree one; those variables vanish
    // in the ring, so the pair is restated on the remaining variables.
    let mut diagnostics = Vec::new();
    let (working, kept, stripped) = match (&s1, &s2) {
        (Structure::Complex(c1), Structure::Complex(c2)) if kind == RingKind::Facet => {
            let (z1, z2) = (c1.strip_zero_dim_facets(), c2.strip_zero_dim_facets());
            if z1.count() != z2.count() {
                run.record(Report::new(
                    Stage::ZeroDimFacets,
                    vec![Violation::ZeroDimCountMismatch { source: z1.count(), target: z2.count() }],
                ))?;
            }
            run.record(Report::pass(Stage::ZeroDimFacets))?;
            if z1.count() > 0 {
                diagnostics.push(format!("stripped {} zero-dimensional facet(s) on each side", z1.count()));
            }
            let restricted = pair.restrict(&z1.kept, &z2.kept).expect("stripping keeps the presentation valid");
            (restricted, (z1.kept, z2.kept), (z1.removed, z2.removed))
        }
        _ => {
            let all_src: Vec<usize> = (0..src.n()).collect();
            let all_tgt: Vec<usize> = (0..tgt.n()).collect();
            (pair.clone(), (all_src, all_tgt), (Vec::new(), Vec::new()))
        }
    };

    run.record(lemma2_check(&working))?;

    let inverse = check_inverse_pair(pair);
    if inverse.stage == Stage::WellDefined {
        run.record(inverse)?;
    } else {
        run.record(Report::pass(Stage::WellDefined))?;
        run.record(inverse)?;
    }

    let m = match build_transversal_matrix(&linear_parts(&working), working.source().field()) {
        Ok(m) => {
            run.record(Report::pass(Stage::Matrix))?;
            m
        }
        Err(r) => return Err(run.record(r).unwrap_err()),
    };
    let cols = match find_nonzero_transversal(&m) {
        Ok(c) => {
            run.record(Report::pass(Stage::Transversal))?;
            c
        }
        Err(r) => return Err(run.record(r).unwrap_err()),
    };

    // A nonzero entry (row, col) says target variable `row` occurs in the
    // linear part of the image of source variable `col`: psi(col) = row.
    let mut forward = vec![usize::MAX; src.n()];
    for (row, &col) in cols.iter().enumerate() {
        forward[kept.0[col]] = kept.1[row];
    }
    for (&a, &b) in stripped.0.iter().zip(&stripped.1) {
        forward[a] = b;
    }
    let psi = Bijection::new(forward).expect("transversal and stripping give a permutation");
    let transversal = cols.iter().enumerate().map(|(r, &c)| (r, c)).collect();

    let ok = s1.is_isomorphism(&s2, &psi).unwrap_or(false);
    if !ok {
        let v = unmapped_sets(&s1, &s2, &psi);
        diagnostics.push(
            "a valid isomorphism pair produced a non-isomorphism; the input or the implementation is wrong".into(),
        );
        run.record(Report::new(Stage::Verify, v))?;
    }
    run.record(Report::pass(Stage::Verify))?;

    if kind != RingKind::StanleyReisner {
        run.record(verify_minimal_generators(src.ideal(), tgt.ideal(), &psi, src.variables(), tgt.variables()))?;
    }

    Ok(ExtractionResult {
        kind,
        bijection: psi,
        transversal,
        source_names: src.variables().to_vec(),
        target_names: tgt.variables().to_vec(),
        source: s1,
        target: s2,
        reports: run.reports,
        diagnostics,
    })
}

fn unmapped_sets(s1: &Structure, s2: &Structure, psi: &Bijection) -> Vec<Violation> {
    let targets = s2.sets();
    let name = |s: &[usize], names: &[String]| s.iter().map(|&i| names[i].clone()).collect::<Vec<_>>();
    let mut v = Vec::new();
    let mut images = Vec::new();
    for f in s1.sets() {
        let img = psi.map_set(&f);
        if !targets.contains(&img) {
            v.push(Violation::FacetNotMapped { facet: name(&f, s1.vertices()), image: name(&img, s2.vertices()) });
        }
        images.push(img);
    }
    for t in &targets {
        if !images.contains(t) {
            v.push(Violation::FacetNotHit { facet: name(t, s2.vertices()) });
        }
    }
    if v.is_empty() {
        v.push(Violation::InvalidPresentation {
            direction: Direction::Forward,
            message: "vertex counts differ".into(),
        });
    }
    v
}
