use super::{mat_mul, AlgebraMap, IsoPair};
use crate::algebra::{Polynomial, Scalar};
use crate::report::{Direction, Report, Stage, Violation};

/// Linear parts of a pair: `a[i][j]` is the coefficient of `y_j` in the image
/// of `x_i`; `b[j][i]` is the coefficient of `x_i` in the image of `y_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearPartData {
    pub a: Vec<Vec<Scalar>>,
    pub b: Vec<Vec<Scalar>>,
}

impl LinearPartData {
    pub fn n(&self) -> usize {
        self.a.len()
    }
}

fn well_defined_violations(map: &AlgebraMap, direction: Direction) -> Vec<Violation> {
    let src = map.source();
    let mut out = Vec::new();
    for g in src.ideal().generators() {
        let gp = Polynomial::monomial(src.field(), src.n(), g.clone(), src.field().one());
        let image = map.apply(&gp).expect("map construction fixes the arity");
        if !image.is_zero() {
            out.push(Violation::GeneratorNotPreserved {
                direction,
                generator: src.show(&gp),
                residue: map.target().show(&image),
            });
        }
    }
    out
}

/// Every source generator must map into the target ideal.
pub fn check_well_defined(map: &AlgebraMap) -> Report {
    Report::new(Stage::WellDefined, well_defined_violations(map, Direction::Forward))
}

/// Well-definedness of both maps of a pair.
pub fn pair_well_defined(pair: &IsoPair) -> Report {
    let mut v = well_defined_violations(pair.forward(), Direction::Forward);
    v.extend(well_defined_violations(pair.backward(), Direction::Backward));
    Report::new(Stage::WellDefined, v)
}

/// Both composites must fix every variable. When either map is not
/// well-defined, that failure is returned instead.
pub fn check_inverse_pair(pair: &IsoPair) -> Report {
    let wd = pair_well_defined(pair);
    if !wd.passed() {
        return wd;
    }
    let mut v = Vec::new();
    let round = |first: &AlgebraMap, second: &AlgebraMap, direction: Direction, v: &mut Vec<Violation>| {
        let p = first.source();
        for i in 0..p.n() {
            let back = second.apply(&first.images()[i]).expect("chained maps");
            let expected = p.var(i).normal_form(p.ideal()).expect("same ring");
            if back != expected {
                v.push(Violation::CompositionMismatch {
                    direction,
                    variable: p.variables()[i].clone(),
                    found: p.show(&back),
                });
            }
        }
    };
    round(pair.forward(), pair.backward(), Direction::Forward, &mut v);
    round(pair.backward(), pair.forward(), Direction::Backward, &mut v);
    Report::new(Stage::InversePair, v)
}

/// Images of zero-divisor variables must have zero constant term, in both directions.
pub fn lemma1_check(pair: &IsoPair) -> Report {
    let mut v = Vec::new();
    for (map, direction) in [(pair.forward(), Direction::Forward), (pair.backward(), Direction::Backward)] {
        for i in map.source().zero_divisor_variables() {
            let c = map.images()[i].constant_term();
            if !c.is_zero() {
                v.push(Violation::ConstantOnZeroDivisor {
                    direction,
                    variable: map.source().variables()[i].clone(),
                    constant: c.to_string(),
                });
            }
        }
    }
    Report::new(Stage::Lemma1, v)
}

/// Rejects constant terms on the images of variables that are not zero
/// divisors. Such maps can be genuine automorphisms, but extraction requires
/// every image to be constant-free.
pub fn constant_term_check(pair: &IsoPair) -> Report {
    let mut v = Vec::new();
    for (map, direction) in [(pair.forward(), Direction::Forward), (pair.backward(), Direction::Backward)] {
        let src = map.source();
        for i in (0..src.n()).filter(|&i| !src.ideal().involves(i)) {
            let c = map.images()[i].constant_term();
            if !c.is_zero() {
                v.push(Violation::ConstantTerm {
                    direction,
                    variable: src.variables()[i].clone(),
                    constant: c.to_string(),
                });
            }
        }
    }
    Report::new(Stage::ConstantTerm, v)
}

/// Equal dimensions, nonempty linear parts on both sides, and linear parts
/// forming mutually inverse matrices.
pub fn lemma2_check(pair: &IsoPair) -> Report {
    let (n, m) = (pair.source().n(), pair.target().n());
    let mut v = Vec::new();
    if n != m {
        v.push(Violation::DimensionMismatch { source: n, target: m });
    }
    for (map, direction) in [(pair.forward(), Direction::Forward), (pair.backward(), Direction::Backward)] {
        for (i, img) in map.images().iter().enumerate() {
            if img.linear_part().iter().all(Scalar::is_zero) {
                v.push(Violation::EmptyLinearPart { direction, variable: map.source().variables()[i].clone() });
            }
        }
    }
    let lp = linear_parts(pair);
    let field = pair.source().field();
    for (name, prod) in [("A*B", mat_mul(&lp.a, &lp.b, field)), ("B*A", mat_mul(&lp.b, &lp.a, field))] {
        for (r, row) in prod.iter().enumerate() {
            for (c, x) in row.iter().enumerate() {
                let expected_one = r == c;
                if (expected_one && !x.is_one()) || (!expected_one && !x.is_zero()) {
                    v.push(Violation::LinearInverse {
                        product: name.into(),
                        row: r + 1,
                        column: c + 1,
                        value: x.to_string(),
                    });
                }
            }
        }
    }
    Report::new(Stage::Lemma2, v)
}

/// Reads the exact linear-part matrices off the images.
pub fn linear_parts(pair: &IsoPair) -> LinearPartData {
    LinearPartData {
        a: pair.forward().images().iter().map(Polynomial::linear_part).collect(),
        b: pair.backward().images().iter().map(Polynomial::linear_part).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::super::testing::*;
    use super::*;
    use crate::algebra::Field;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn identity_relabeling_is_well_defined() {
        let x = pres(q(), "x", 3, &[&[0, 1, 2]]);
        let p = IsoPair::identity(x);
        assert!(check_well_defined(p.forward()).passed());
        assert!(check_inverse_pair(&p).passed());
    }

    #[test]
    fn elementary_addition_is_well_defined() {
        let x = pres(q(), "x", 3, &[&[0, 1]]);
        let y = pres(q(), "y", 3, &[&[0, 1], &[1, 2]]);
        let f = AlgebraMap::parse(x, y, &["y1 + 5*y3", "y2", "y3"]).unwrap();
        assert!(check_well_defined(&f).passed());
    }

    #[test]
    fn identity_between_p4_and_star_fails() {
        let p4 = pres(q(), "x", 4, &[&[0, 1], &[1, 2], &[2, 3]]);
        let star = pres(q(), "y", 4, &[&[0, 1], &[0, 2], &[0, 3]]);
        let f = AlgebraMap::parse(p4, star, &["y1", "y2", "y3", "y4"]).unwrap();
        let r = check_well_defined(&f);
        assert!(!r.passed());
        assert_eq!(r.stage, Stage::WellDefined);
        assert!(
            r.violations.iter().any(|v| matches!(v,
            Violation::GeneratorNotPreserved { generator, residue, .. } if generator == "x2*x3" && residue == "y2*y3"))
        );
    }

    #[test]
    fn scaling_pairs() {
        let x = pres(q(), "x", 2, &[&[0, 1]]);
        let y = pres(q(), "y", 2, &[&[0, 1]]);
        let good = pair(&x, &y, &["2*y1", "2*y2"], &["1/2*x1", "1/2*x2"]);
        assert!(check_inverse_pair(&good).passed());
        let bad = pair(&x, &y, &["2*y1", "2*y2"], &["2*x1", "2*x2"]);
        let r = check_inverse_pair(&bad);
        assert_eq!(r.stage, Stage::InversePair);
        assert!(r.violations.contains(&Violation::CompositionMismatch {
            direction: Direction::Forward,
            variable: "x1".into(),
            found: "4*x1".into()
        }));
        let lp = linear_parts(&good);
        assert_eq!(lp.a[0][0].to_string(), "2");
        assert_eq!(lp.b[1][1].to_string(), "1/2");
        assert!(lp.a[0][1].is_zero());
    }

    #[test]
    fn automorphism_with_offdiagonal_term() {
        let x = pres(q(), "x", 3, &[&[0, 1], &[1, 2]]);
        let p = pair(&x, &x, &["x1 + 3*x3", "x2", "x3"], &["x1 - 3*x3", "x2", "x3"]);
        assert!(check_inverse_pair(&p).passed());
        assert!(lemma2_check(&p).passed());
        let lp = linear_parts(&p);
        assert_eq!(lp.a[0][2].to_string(), "3");
        assert_eq!(lp.b[0][2].to_string(), "-3");
        for i in 0..3 {
            assert!(lp.a[i][i].is_one() && lp.b[i][i].is_one());
        }
    }

    #[test]
    fn swap_linear_parts() {
        let x = pres(q(), "x", 2, &[]);
        let y = pres(q(), "y", 2, &[]);
        let p = pair(&x, &y, &["y2", "y1"], &["x2", "x1"]);
        let lp = linear_parts(&p);
        for m in [&lp.a, &lp.b] {
            assert!(m[0][1].is_one() && m[1][0].is_one() && m[0][0].is_zero() && m[1][1].is_zero());
        }
    }

    #[test]
    fn inverse_check_reports_well_definedness_first() {
        let p4 = pres(q(), "x", 4, &[&[0, 1], &[1, 2], &[2, 3]]);
        let star = pres(q(), "y", 4, &[&[0, 1], &[0, 2], &[0, 3]]);
        let p = pair(&p4, &star, &["y1", "y2", "y3", "y4"], &["x1", "x2", "x3", "x4"]);
        assert_eq!(check_inverse_pair(&p).stage, Stage::WellDefined);
    }

    #[test]
    fn lemma1_flags_only_zero_divisors() {
        let x = pres(q(), "x", 3, &[&[0, 1]]);
        let p = pair(&x, &x, &["1 + x1", "x2", "x3"], &["x1 - 1", "x2", "x3"]);
        let r = lemma1_check(&p);
        assert_eq!(r.stage, Stage::Lemma1);
        assert_eq!(r.violations.len(), 2);

        let free = pair(&x, &x, &["x1", "x2", "x3 + 1"], &["x1", "x2", "x3 - 1"]);
        assert!(lemma1_check(&free).passed());
        assert!(check_inverse_pair(&free).passed());
        let r = constant_term_check(&free);
        assert!(!r.passed());
        assert_eq!(r.stage, Stage::ConstantTerm);
    }

    #[test]
    fn lemma2_violations() {
        let x = pres(q(), "x", 3, &[]);
        let id = IsoPair::identity(x.clone());
        assert!(lemma2_check(&id).passed());

        let x2 = pres(q(), "x", 2, &[]);
        let y3 = pres(q(), "y", 3, &[]);
        let p = pair(&x2, &y3, &["y1", "y2"], &["x1", "x2", "0"]);
        let r = lemma2_check(&p);
        assert!(r.violations.contains(&Violation::DimensionMismatch { source: 2, target: 3 }));

        let z = pair(&x, &x, &["x1^2", "x2", "x3"], &["x1", "x2", "x3"]);
        let r = lemma2_check(&z);
        assert!(r
            .violations
            .contains(&Violation::EmptyLinearPart { direction: Direction::Forward, variable: "x1".into() }));
    }

    #[test]
    fn inverse_pair_implies_inverse_linear_parts_over_gf() {
        let f = Field::prime(101).unwrap();
        let x = pres(f, "x", 3, &[&[0, 1], &[1, 2]]);
        let p = pair(&x, &x, &["5*x1 + x3", "x2", "x3"], &["81*x1 + 20*x3", "x2", "x3"]);
        // 5 * 81 = 1 and 81 + 20 = 0 mod 101
        assert!(check_inverse_pair(&p).passed(), "{}", check_inverse_pair(&p));
        assert!(lemma2_check(&p).passed());
    }
}
