//! The model proper: the valence map Phi_x(a) = 2^{-1/2}(x - a), the
//! anti-automorphism lambda with lambda(i) = k, lambda(j) = -i,
//! lambda(k) = j, the canonical-formula identity
//!
//!   lambda({Phi_x(a) : Phi_y(b)}) = {Phi_x(b) : Phi_{a^{-1}}(y)}
//!
//! over quadruples from Q, and the exhaustive scan classifying all 4096
//! quadruples under both ratio conventions.

use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Realization};
use crate::quat::{jordan_ratio, Quat, RatioConvention};
use crate::scalar::ScalarQ;

/// A value of Phi: a special element together with the pair it was
/// built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Valence {
    value: Quat,
    x: Quat,
    a: Quat,
}

impl Valence {
    pub fn value(&self) -> &Quat {
        &self.value
    }

    pub fn provenance(&self) -> (&Quat, &Quat) {
        (&self.x, &self.a)
    }
}

fn in_q(q: &Quat) -> bool {
    catalog::lipschitz_units().contains(q)
}

fn require_in_q(q: &Quat) -> Result<()> {
    if in_q(q) {
        Ok(())
    } else {
        Err(Error::NotInQ { label: q.label() })
    }
}

/// Phi_x(a) = 2^{-1/2}(x - a) for x, a in Q with x != +-a; the result is
/// verified to be a special element.
pub fn phi(x: &Quat, a: &Quat) -> Result<Valence> {
    require_in_q(x)?;
    require_in_q(a)?;
    if x == a || *x == -a {
        return Err(Error::DegenerateValence {
            x: x.label(),
            a: a.label(),
        });
    }
    let value = (x - a).scale(&ScalarQ::inv_sqrt2());
    debug_assert!(catalog::special_elements().contains(&value));
    Ok(Valence {
        value,
        x: x.clone(),
        a: a.clone(),
    })
}

/// The anti-automorphism lambda, extended linearly from
/// lambda(1) = 1, lambda(i) = k, lambda(j) = -i, lambda(k) = j.
pub fn lambda_map(q: &Quat) -> Quat {
    let [q0, q1, q2, q3] = q.coords();
    Quat::new([q0.clone(), -q2, q3.clone(), q1.clone()])
}

/// Order of lambda as a permutation of a finite set of quaternions
/// (e.g. 2O). Panics if lambda does not preserve the set.
pub fn lambda_order_on(set: &[Quat]) -> usize {
    let mut order = 1;
    let mut current: Vec<Quat> = set.iter().map(lambda_map).collect();
    for q in &current {
        assert!(set.contains(q), "lambda does not preserve the set");
    }
    while current.iter().zip(set).any(|(c, s)| c != s) {
        order += 1;
        current = current.iter().map(lambda_map).collect();
    }
    order
}

/// A quadruple (x, a, y, b) of elements of Q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfQuadruple {
    pub x: Quat,
    pub a: Quat,
    pub y: Quat,
    pub b: Quat,
}

impl CfQuadruple {
    pub fn new(x: Quat, a: Quat, y: Quat, b: Quat) -> Result<Self> {
        for q in [&x, &a, &y, &b] {
            require_in_q(q)?;
        }
        Ok(CfQuadruple { x, a, y, b })
    }

    /// The four valences Phi_x(a), Phi_y(b), Phi_x(b), Phi_{a^{-1}}(y)
    /// must all be defined; the error names the first offending pair.
    pub fn admissibility(&self) -> Result<()> {
        let a_inv = self.a.inv().expect("Q elements are invertible");
        let checks: [(&str, &Quat, &Quat); 4] = [
            ("(x, a)", &self.x, &self.a),
            ("(y, b)", &self.y, &self.b),
            ("(x, b)", &self.x, &self.b),
            ("(a^-1, y)", &a_inv, &self.y),
        ];
        for (name, u, v) in checks {
            if u == v || *u == -v {
                return Err(Error::Inadmissible(format!(
                    "{name} = ({}, {})",
                    u.label(),
                    v.label()
                )));
            }
        }
        Ok(())
    }

    pub fn is_admissible(&self) -> bool {
        self.admissibility().is_ok()
    }
}

/// Outcome of the canonical-formula identity on one quadruple.
#[derive(Debug, Clone)]
pub struct CfOutcome {
    pub holds: bool,
    pub lhs: Quat,
    pub rhs: Quat,
}

/// Both sides of the identity:
/// lhs = {Phi_x(a) : Phi_y(b)}, rhs = {Phi_x(b) : Phi_{a^{-1}}(y)}.
pub fn cf_sides(quad: &CfQuadruple, convention: RatioConvention) -> Result<(Quat, Quat)> {
    quad.admissibility()?;
    let a_inv = quad.a.inv().expect("Q elements are invertible");
    let lhs = jordan_ratio(
        phi(&quad.x, &quad.a)?.value(),
        phi(&quad.y, &quad.b)?.value(),
        convention,
    );
    let rhs = jordan_ratio(
        phi(&quad.x, &quad.b)?.value(),
        phi(&a_inv, &quad.y)?.value(),
        convention,
    );
    Ok((lhs, rhs))
}

/// True iff lambda(lhs) equals rhs exactly.
pub fn cf_check(quad: &CfQuadruple, convention: RatioConvention) -> Result<CfOutcome> {
    let (lhs, rhs) = cf_sides(quad, convention)?;
    let holds = lambda_map(&lhs) == rhs;
    Ok(CfOutcome { holds, lhs, rhs })
}

/// Verifies the bilinear expansion
/// {Phi_x(a) : Phi_y(b)} = (1/2)[({x:y} + {a:b}) - ({a:y} + {x:b})].
pub fn ratio_expansion_check(quad: &CfQuadruple, convention: RatioConvention) -> Result<bool> {
    quad.admissibility()?;
    let direct = jordan_ratio(
        phi(&quad.x, &quad.a)?.value(),
        phi(&quad.y, &quad.b)?.value(),
        convention,
    );
    let r = |u: &Quat, v: &Quat| jordan_ratio(u, v, convention);
    let sum = &(&r(&quad.x, &quad.y) + &r(&quad.a, &quad.b))
        - &(&r(&quad.a, &quad.y) + &r(&quad.x, &quad.b));
    let half = ScalarQ::new(crate::scalar::Rat::new(1, 2).unwrap(), crate::scalar::Rat::zero());
    Ok(direct == sum.scale(&half))
}

/// Classification of one quadruple in the scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CfClass {
    Inadmissible,
    Holds,
    Fails,
}

/// Result of classifying all 8^4 quadruples over Q.
#[derive(Debug, Clone)]
pub struct ScanReport {
    pub convention: RatioConvention,
    pub inadmissible: usize,
    pub holds: usize,
    pub fails: usize,
    /// Quadruples where the identity holds, as canonical labels in
    /// lexicographic id order.
    pub holds_set: Vec<[String; 4]>,
    /// Classification indexed by (x, a, y, b) ids in the canonical
    /// element order of Q.
    pub classes: Vec<CfClass>,
}

impl ScanReport {
    pub fn to_json(&self) -> Value {
        json!({
            "convention": self.convention.as_str(),
            "counts": {
                "inadmissible": self.inadmissible,
                "holds": self.holds,
                "fails": self.fails,
            },
            "holds": self.holds_set,
        })
    }
}

/// Iterates all 4096 quadruples over Q in lexicographic id order and
/// classifies each as inadmissible / holds / fails.
pub fn cf_scan(convention: RatioConvention) -> ScanReport {
    let q = catalog::build(catalog::CatalogName::Q).expect("catalog Q");
    let units: Vec<Quat> = q
        .elements()
        .map(|(_, e)| match &e.realization {
            Realization::Quaternion(quat) => quat.clone(),
            _ => unreachable!("Q is quaternion-realized"),
        })
        .collect();
    let n = units.len();
    let mut classes = Vec::with_capacity(n * n * n * n);
    let mut holds_set = Vec::new();
    let (mut inadmissible, mut holds, mut fails) = (0, 0, 0);
    for xi in 0..n {
        for ai in 0..n {
            for yi in 0..n {
                for bi in 0..n {
                    let quad = CfQuadruple {
                        x: units[xi].clone(),
                        a: units[ai].clone(),
                        y: units[yi].clone(),
                        b: units[bi].clone(),
                    };
                    let class = match cf_check(&quad, convention) {
                        Err(_) => {
                            inadmissible += 1;
                            CfClass::Inadmissible
                        }
                        Ok(outcome) if outcome.holds => {
                            holds += 1;
                            holds_set.push([
                                q.label(xi as u16).to_string(),
                                q.label(ai as u16).to_string(),
                                q.label(yi as u16).to_string(),
                                q.label(bi as u16).to_string(),
                            ]);
                            CfClass::Holds
                        }
                        Ok(_) => {
                            fails += 1;
                            CfClass::Fails
                        }
                    };
                    classes.push(class);
                }
            }
        }
    }
    ScanReport {
        convention,
        inadmissible,
        holds,
        fails,
        holds_set,
        classes,
    }
}

/// Extends an automorphism of Q (given as an image vector on the ids of
/// the catalog group Q) linearly to all of H.
pub fn aut_q_action(q_group: &FiniteGroup, images: &[u16], v: &Quat) -> Quat {
    let image_of = |basis: &Quat| -> Quat {
        let id = catalog::quat_id(q_group, basis).expect("basis element in Q");
        match &q_group.element(images[id as usize]).realization {
            Realization::Quaternion(q) => q.clone(),
            _ => unreachable!(),
        }
    };
    let [c0, c1, c2, c3] = v.coords();
    let mut acc = Quat::scalar(c0.clone());
    acc = &acc + &image_of(&Quat::i()).scale(c1);
    acc = &acc + &image_of(&Quat::j()).scale(c2);
    &acc + &image_of(&Quat::k()).scale(c3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::CatalogName;
    use crate::group::GroupHom;
    use crate::scalar::Rat;

    fn half_of(v: &Quat) -> Quat {
        v.scale(&ScalarQ::new(Rat::new(1, 2).unwrap(), Rat::zero()))
    }

    #[test]
    fn phi_examples() {
        let c = ScalarQ::inv_sqrt2();
        let p = phi(&Quat::one(), &Quat::i()).unwrap();
        assert_eq!(p.value(), &(&Quat::one() - &Quat::i()).scale(&c));
        let p = phi(&Quat::j(), &Quat::k()).unwrap();
        assert_eq!(p.value(), &(&Quat::j() - &Quat::k()).scale(&c));
        let err = phi(&Quat::one(), &(-&Quat::one())).unwrap_err();
        assert!(matches!(err, Error::DegenerateValence { .. }));
        let err = phi(&Quat::i(), &Quat::i()).unwrap_err();
        assert!(matches!(err, Error::DegenerateValence { .. }));
        // non-Q argument
        let err = phi(&Quat::from_ints(2, 0, 0, 0), &Quat::i()).unwrap_err();
        assert!(matches!(err, Error::NotInQ { .. }));
    }

    #[test]
    fn lambda_basis_table() {
        assert_eq!(lambda_map(&Quat::one()), Quat::one());
        assert_eq!(lambda_map(&Quat::i()), Quat::k());
        assert_eq!(lambda_map(&Quat::j()), -&Quat::i());
        assert_eq!(lambda_map(&Quat::k()), Quat::j());
        // lambda((j - k)/2) = -(i + j)/2
        let arg = half_of(&(&Quat::j() - &Quat::k()));
        let expect = -&half_of(&(&Quat::i() + &Quat::j()));
        assert_eq!(lambda_map(&arg), expect);
    }

    /// Composition oracle: apply the rotation sigma^2 (i -> k, j -> i,
    /// k -> j), then the sign flip I (i -> i, j -> -j, k -> -k), then
    /// quaternion conjugation.
    fn lambda_by_composition(q: &Quat) -> Quat {
        let [c0, c1, c2, c3] = q.coords();
        let sigma2 = Quat::new([c0.clone(), c2.clone(), c3.clone(), c1.clone()]);
        let [d0, d1, d2, d3] = sigma2.coords();
        let flipped = Quat::new([d0.clone(), d1.clone(), -d2, -d3]);
        flipped.conj()
    }

    #[test]
    fn lambda_agrees_with_composition_recipe() {
        for u in catalog::binary_octahedral_elements() {
            assert_eq!(lambda_map(&u), lambda_by_composition(&u));
        }
    }

    #[test]
    fn lambda_is_antimultiplicative_on_2o() {
        let elems = catalog::binary_octahedral_elements();
        for u in &elems {
            for v in &elems {
                assert_eq!(lambda_map(&u.mul(v)), lambda_map(v).mul(&lambda_map(u)));
            }
        }
    }

    #[test]
    fn lambda_preserves_2o_and_specials() {
        let o2 = catalog::binary_octahedral_elements();
        let specials = catalog::special_elements();
        for u in &o2 {
            assert!(o2.contains(&lambda_map(u)));
        }
        for s in &specials {
            assert!(specials.contains(&lambda_map(s)));
        }
    }

    #[test]
    fn lambda_order_is_six() {
        let o2 = catalog::binary_octahedral_elements();
        assert_eq!(lambda_order_on(&o2), 6);
        // so lambda^4 is not the identity on Q
        let mut v = Quat::i();
        for _ in 0..4 {
            v = lambda_map(&v);
        }
        assert_ne!(v, Quat::i());
    }

    fn paper_quadruple() -> CfQuadruple {
        CfQuadruple::new(Quat::one(), Quat::i(), Quat::j(), Quat::k()).unwrap()
    }

    #[test]
    fn cf_sides_on_1ijk() {
        let quad = paper_quadruple();
        let (lhs, rhs) = cf_sides(&quad, RatioConvention::Plain).unwrap();
        assert_eq!(lhs, half_of(&(&Quat::j() - &Quat::k())));
        assert_eq!(rhs, -&half_of(&(&Quat::i() + &Quat::j())));
        // star convention flips both signs
        let (lhs_s, rhs_s) = cf_sides(&quad, RatioConvention::Star).unwrap();
        assert_eq!(lhs_s, half_of(&(&Quat::k() - &Quat::j())));
        assert_eq!(rhs_s, half_of(&(&Quat::i() + &Quat::j())));
    }

    #[test]
    fn cf_check_on_1ijk_both_conventions() {
        let quad = paper_quadruple();
        for conv in RatioConvention::BOTH {
            let outcome = cf_check(&quad, conv).unwrap();
            assert!(outcome.holds);
        }
    }

    #[test]
    fn inadmissible_names_offending_pair() {
        // (1, i, i, k): a^-1 = -i = -y, so the (a^-1, y) pair degenerates
        let quad = CfQuadruple::new(Quat::one(), Quat::i(), Quat::i(), Quat::k()).unwrap();
        let err = cf_check(&quad, RatioConvention::Plain).unwrap_err();
        match err {
            Error::Inadmissible(msg) => assert!(msg.starts_with("(a^-1, y)"), "{msg}"),
            other => panic!("expected Inadmissible, got {other:?}"),
        }
    }

    #[test]
    fn expansion_examples() {
        let quad = paper_quadruple();
        assert!(ratio_expansion_check(&quad, RatioConvention::Plain).unwrap());
        let quad2 = CfQuadruple::new(Quat::one(), Quat::j(), Quat::i(), Quat::k()).unwrap();
        assert!(ratio_expansion_check(&quad2, RatioConvention::Plain).unwrap());
    }

    #[test]
    fn scan_counts_match_frozen_values() {
        for conv in RatioConvention::BOTH {
            let report = cf_scan(conv);
            assert_eq!(report.inadmissible, 2752);
            assert_eq!(report.holds, 144);
            assert_eq!(report.fails, 1200);
            assert!(report
                .holds_set
                .contains(&["1".into(), "i".into(), "j".into(), "k".into()]));
        }
    }

    #[test]
    fn scan_inadmissible_when_x_equals_a() {
        let report = cf_scan(RatioConvention::Plain);
        let q = catalog::build(CatalogName::Q).unwrap();
        let n = q.order();
        for x in 0..n {
            for y in 0..n {
                for b in 0..n {
                    let idx = ((x * n + x) * n + y) * n + b;
                    assert_eq!(report.classes[idx], CfClass::Inadmissible);
                }
            }
        }
    }

    /// Independent classification route: admissibility from the raw
    /// definition and the identity evaluated through the bilinear
    /// expansion of the ratio rather than through Phi values.
    #[test]
    fn scan_cross_checked_by_expansion_oracle() {
        let q = catalog::build(CatalogName::Q).unwrap();
        let units: Vec<Quat> = q
            .elements()
            .map(|(_, e)| match &e.realization {
                Realization::Quaternion(quat) => quat.clone(),
                _ => unreachable!(),
            })
            .collect();
        let half = ScalarQ::new(Rat::new(1, 2).unwrap(), Rat::zero());
        for conv in RatioConvention::BOTH {
            let report = cf_scan(conv);
            let mut idx = 0;
            for x in &units {
                for a in &units {
                    for y in &units {
                        for b in &units {
                            let a_inv = a.inv().unwrap();
                            let adm = x != a
                                && *x != -a
                                && y != b
                                && *y != -b
                                && x != b
                                && *x != -b
                                && a_inv != *y
                                && a_inv != -y;
                            let expect = if !adm {
                                CfClass::Inadmissible
                            } else {
                                let r = |u: &Quat, v: &Quat| jordan_ratio(u, v, conv);
                                let lhs = (&(&r(x, y) + &r(a, b)) - &(&r(a, y) + &r(x, b)))
                                    .scale(&half);
                                let rhs = (&(&r(x, &a_inv) + &r(b, y))
                                    - &(&r(b, &a_inv) + &r(x, y)))
                                    .scale(&half);
                                if lambda_map(&lhs) == rhs {
                                    CfClass::Holds
                                } else {
                                    CfClass::Fails
                                }
                            };
                            assert_eq!(report.classes[idx], expect);
                            idx += 1;
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn aut_action_examples() {
        let q = catalog::build(CatalogName::Q).unwrap();
        let aut_q = q.automorphism_group().unwrap();
        // sigma = (i j k) rotation
        let sigma = catalog::find_automorphism(
            &aut_q,
            &q,
            &[(Quat::i(), Quat::j()), (Quat::j(), Quat::k())],
        )
        .unwrap();
        let images = match &aut_q.element(sigma).realization {
            Realization::AutMap(m) => m.clone(),
            _ => unreachable!(),
        };
        let c = ScalarQ::inv_sqrt2();
        let arg = (&Quat::one() - &Quat::i()).scale(&c);
        let expect = (&Quat::one() - &Quat::j()).scale(&c);
        assert_eq!(aut_q_action(&q, &images, &arg), expect);
        // the identity automorphism acts as the identity
        let e = catalog::aut_id(&aut_q, &(0..8).collect::<Vec<u16>>()).unwrap();
        let id_images = match &aut_q.element(e).realization {
            Realization::AutMap(m) => m.clone(),
            _ => unreachable!(),
        };
        assert_eq!(aut_q_action(&q, &id_images, &arg), arg);
        // I sends j to -j
        let inner_i = catalog::find_automorphism(
            &aut_q,
            &q,
            &[(Quat::i(), Quat::i()), (Quat::j(), -&Quat::j())],
        )
        .unwrap();
        let i_images = match &aut_q.element(inner_i).realization {
            Realization::AutMap(m) => m.clone(),
            _ => unreachable!(),
        };
        assert_eq!(aut_q_action(&q, &i_images, &Quat::j()), -&Quat::j());
    }

    #[test]
    fn exercise_i_sigma_generates_c3_in_aut_q() {
        let q = catalog::build(CatalogName::Q).unwrap();
        let aut_q = q.automorphism_group().unwrap();
        let sigma = catalog::find_automorphism(
            &aut_q,
            &q,
            &[(Quat::i(), Quat::j()), (Quat::j(), Quat::k())],
        )
        .unwrap();
        let c3 = catalog::build(CatalogName::Cyclic(3)).unwrap();
        let hom = GroupHom::from_generator_images(c3, aut_q.clone(), &[(1, sigma)]).unwrap();
        assert!(hom.is_injective());
        assert_eq!(aut_q.element_order(sigma), 3);
    }
}
