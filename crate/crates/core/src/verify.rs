//! The verification suites behind `ccf verify`: catalog decomposition,
//! the small-groups table (sequences, splittings, semidirect
//! decompositions), automorphism groups, the canonical-formula scan,
//! Jordan algebra properties, matrix-group isomorphisms, and the braid
//! suite. Checks that contradict a documented claim report a
//! `discrepancy` with the computed witness instead of failing the run.

use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::braid::{self, full_twist, parse_braid, BraidWord, IntMat};
use crate::catalog::{self, CatalogName};
use crate::cf::{self, CfClass, CfQuadruple};
use crate::error::{Error, Result};
use crate::group::{
    direct_product, semidirect_product, FiniteGroup, GroupHom, Mat2Fp, Perm, Realization,
    SequenceSpec,
};
use crate::quat::{jordan_product, jordan_ratio, Quat, RatioConvention};
use crate::report::{CheckResult, CheckStatus, RunReport};
use crate::scalar::{Rat, ScalarQ};
use crate::search::{find_section, isomorphic};

/// Which suite(s) to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    All,
    Cf,
    Sequences,
    Aut,
    Braid,
    MatrixIso,
    Jordan,
}

impl FromStr for Scope {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Scope::All),
            "cf" => Ok(Scope::Cf),
            "sequences" => Ok(Scope::Sequences),
            "aut" => Ok(Scope::Aut),
            "braid" => Ok(Scope::Braid),
            "matrix-iso" => Ok(Scope::MatrixIso),
            "jordan" => Ok(Scope::Jordan),
            other => Err(Error::Unsupported(format!(
                "unknown scope {other:?} (expected all, cf, sequences, aut, braid, matrix-iso or jordan)"
            ))),
        }
    }
}

type Outcome = (CheckStatus, String, Value);

fn pass(details: impl Into<String>, payload: Value) -> Outcome {
    (CheckStatus::Pass, details.into(), payload)
}

fn verdict(cond: bool, details: impl Into<String>, payload: Value) -> Outcome {
    let status = if cond {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    (status, details.into(), payload)
}

fn discrepancy(details: impl Into<String>, payload: Value) -> Outcome {
    (CheckStatus::Discrepancy, details.into(), payload)
}

fn skipped(details: impl Into<String>) -> Outcome {
    (CheckStatus::Skipped, details.into(), json!({}))
}

fn hom_json(h: &GroupHom) -> Value {
    json!({
        "source": h.source().name(),
        "target": h.target().name(),
        "map": h.map(),
    })
}

/// Shared context: every catalog group and search result the checks
/// reuse, built once per run.
pub struct Ctx {
    q: FiniteGroup,
    v: FiniteGroup,
    c2: FiniteGroup,
    c3: FiniteGroup,
    s3: FiniteGroup,
    s4: FiniteGroup,
    a4: FiniteGroup,
    t2: FiniteGroup,
    o2: FiniteGroup,
    sl2_2: FiniteGroup,
    sl2_3: FiniteGroup,
    sl2_5: FiniteGroup,
    aut_q: FiniteGroup,
    o2_elems: Vec<Quat>,
    specials: Vec<Quat>,
}

impl Ctx {
    pub fn new() -> Self {
        let build = |n| catalog::build(n).expect("catalog construction");
        let q = build(CatalogName::Q);
        let aut_q = q.automorphism_group().expect("Aut(Q)");
        Ctx {
            v: build(CatalogName::V),
            c2: build(CatalogName::Cyclic(2)),
            c3: build(CatalogName::Cyclic(3)),
            s3: build(CatalogName::Sym(3)),
            s4: build(CatalogName::Sym(4)),
            a4: build(CatalogName::A4),
            t2: build(CatalogName::T2),
            o2: build(CatalogName::O2),
            sl2_2: build(CatalogName::Sl2(2)),
            sl2_3: build(CatalogName::Sl2(3)),
            sl2_5: build(CatalogName::Sl2(5)),
            q,
            aut_q,
            o2_elems: catalog::binary_octahedral_elements(),
            specials: catalog::special_elements(),
        }
    }

    fn minus_one(&self, group: &FiniteGroup) -> u16 {
        catalog::quat_id(group, &(-&Quat::one())).expect("-1 in a quaternion group")
    }

    /// The inclusion of Q into 2O by quaternion matching.
    fn q_in_o2(&self) -> GroupHom {
        let map: Vec<u16> = self
            .q
            .elements()
            .map(|(_, e)| match &e.realization {
                Realization::Quaternion(u) => catalog::quat_id(&self.o2, u).unwrap(),
                _ => unreachable!(),
            })
            .collect();
        GroupHom::new(self.q.clone(), self.o2.clone(), map).expect("Q embeds in 2O")
    }

    /// The projection Q -> V through inner automorphisms, with catalog V
    /// as the target.
    fn q_onto_v(&self) -> GroupHom {
        let n = self.q.order();
        let map: Vec<u16> = self
            .q
            .ids()
            .map(|h| {
                let images: Vec<u16> = (0..n as u16).map(|g| self.q.conjugate(g, h)).collect();
                catalog::aut_id(&self.v, &images).expect("conjugation map in V")
            })
            .collect();
        GroupHom::new(self.q.clone(), self.v.clone(), map).expect("Q -> V")
    }

    /// sigma = (i j k) as an element of Aut(Q).
    fn sigma_in_aut_q(&self) -> u16 {
        catalog::find_automorphism(
            &self.aut_q,
            &self.q,
            &[(Quat::i(), Quat::j()), (Quat::j(), Quat::k())],
        )
        .expect("rotation (i j k) in Aut(Q)")
    }

    fn c2_into(&self, group: &FiniteGroup) -> GroupHom {
        GroupHom::from_generator_images(self.c2.clone(), group.clone(), &[(1, self.minus_one(group))])
            .expect("central C2")
    }

    fn v_label(&self, name: &str) -> u16 {
        self.v.ids().find(|&g| self.v.label(g) == name).unwrap()
    }
}

impl Default for Ctx {
    fn default() -> Self {
        Self::new()
    }
}

fn aut_maps(aut: &FiniteGroup) -> Vec<Vec<u16>> {
    aut.elements()
        .map(|(_, e)| match &e.realization {
            Realization::AutMap(m) => m.clone(),
            _ => unreachable!("automorphism group realization"),
        })
        .collect()
}

fn random_unit_quat(rng: &mut ChaCha8Rng) -> Quat {
    let coord = |rng: &mut ChaCha8Rng| {
        ScalarQ::new(
            Rat::new(rng.gen_range(-6..=6), rng.gen_range(1..=4)).unwrap(),
            Rat::new(rng.gen_range(-6..=6), rng.gen_range(1..=4)).unwrap(),
        )
    };
    Quat::new([coord(rng), coord(rng), coord(rng), coord(rng)])
}

fn random_braid_word(rng: &mut ChaCha8Rng, len: usize) -> BraidWord {
    use braid::Letter;
    BraidWord::new(
        (0..len)
            .map(|_| match rng.gen_range(0..4) {
                0 => Letter::A,
                1 => Letter::AInv,
                2 => Letter::B,
                _ => Letter::BInv,
            })
            .collect(),
    )
}

fn mat_id(group: &FiniteGroup, m: &Mat2Fp) -> Option<u16> {
    group
        .elements()
        .find(|(_, e)| {
            matches!(&e.realization, Realization::MatrixFp { p, entries }
                if *p == m.p && *entries == m.entries)
        })
        .map(|(id, _)| id)
}

fn perm_id(group: &FiniteGroup, p: &Perm) -> Option<u16> {
    group
        .elements()
        .find(|(_, e)| matches!(&e.realization, Realization::Permutation(v) if *v == p.0))
        .map(|(id, _)| id)
}

/// Frozen scan counts, from the verified first run (cross-checked by an
/// independent expansion-route oracle in the test suite).
pub const SCAN_INADMISSIBLE: usize = 2752;
pub const SCAN_HOLDS: usize = 144;
pub const SCAN_FAILS: usize = 1200;

struct Runner {
    results: Vec<CheckResult>,
}

impl Runner {
    fn run(&mut self, id: &str, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let (status, details, payload) = f();
        self.results.push(CheckResult {
            id: id.to_string(),
            status,
            details,
            payload,
            elapsed_us: start.elapsed().as_micros() as u64,
        });
    }
}

/// Runs the selected suites and returns the deterministic report
/// (checks sorted by id; timings are the only varying fields).
pub fn run(scope: Scope, conventions: &[RatioConvention]) -> RunReport {
    let total_start = Instant::now();
    let ctx = Ctx::new();
    let mut runner = Runner {
        results: Vec::new(),
    };
    let include = |s: Scope| scope == Scope::All || scope == s;

    if include(Scope::Cf) {
        cf_checks(&mut runner, &ctx, conventions);
    }
    if include(Scope::Sequences) {
        sequence_checks(&mut runner, &ctx);
    }
    if include(Scope::Aut) {
        aut_checks(&mut runner, &ctx);
    }
    if include(Scope::Braid) {
        braid_checks(&mut runner, &ctx);
    }
    if include(Scope::MatrixIso) {
        matrix_checks(&mut runner, &ctx);
    }
    if include(Scope::Jordan) {
        jordan_checks(&mut runner, &ctx, conventions);
    }

    let mut checks = runner.results;
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    for pair in checks.windows(2) {
        assert_ne!(pair[0].id, pair[1].id, "check ids must be unique");
    }
    RunReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        conventions: conventions.iter().map(|c| c.as_str().to_string()).collect(),
        checks,
        total_elapsed_us: total_start.elapsed().as_micros() as u64,
    }
}

fn cf_checks(r: &mut Runner, ctx: &Ctx, conventions: &[RatioConvention]) {
    r.run("cf.lambda.table", || {
        let table_ok = cf::lambda_map(&Quat::one()) == Quat::one()
            && cf::lambda_map(&Quat::i()) == Quat::k()
            && cf::lambda_map(&Quat::j()) == -&Quat::i()
            && cf::lambda_map(&Quat::k()) == Quat::j();
        verdict(
            table_ok,
            "lambda(1)=1, lambda(i)=k, lambda(j)=-i, lambda(k)=j",
            json!({}),
        )
    });

    r.run("cf.lambda.antimultiplicative", || {
        let bad = ctx.o2_elems.iter().flat_map(|u| {
            ctx.o2_elems
                .iter()
                .filter(move |v| cf::lambda_map(&u.mul(v)) != cf::lambda_map(v).mul(&cf::lambda_map(u)))
        });
        let count = bad.count();
        verdict(
            count == 0,
            "lambda(uv) = lambda(v) lambda(u) on all 48x48 pairs of 2O",
            json!({"violations": count}),
        )
    });

    r.run("cf.lambda.preserves-2o", || {
        let o2_ok = ctx.o2_elems.iter().all(|u| ctx.o2_elems.contains(&cf::lambda_map(u)));
        let sp_ok = ctx.specials.iter().all(|u| ctx.specials.contains(&cf::lambda_map(u)));
        verdict(
            o2_ok && sp_ok,
            "lambda preserves 2O and the special elements setwise",
            json!({"preserves_2o": o2_ok, "preserves_specials": sp_ok}),
        )
    });

    r.run("cf.lambda.order", || {
        let order = cf::lambda_order_on(&ctx.o2_elems);
        pass(
            format!("computed order of lambda as a permutation of 2O: {order} (lambda^4 is not the identity)"),
            json!({"order": order}),
        )
    });

    for &conv in conventions {
        let suffix = conv.as_str();

        r.run(&format!("cf.quadruple.1ijk.{suffix}"), || {
            let quad =
                CfQuadruple::new(Quat::one(), Quat::i(), Quat::j(), Quat::k()).expect("in Q");
            let outcome = cf::cf_check(&quad, conv).expect("admissible");
            let expected = match conv {
                RatioConvention::Plain => ("(j-k)/2", "(-i-j)/2"),
                RatioConvention::Star => ("(k-j)/2", "(i+j)/2"),
            };
            let sides_ok =
                outcome.lhs.label() == expected.0 && outcome.rhs.label() == expected.1;
            verdict(
                outcome.holds && sides_ok,
                format!(
                    "lambda(lhs) = rhs on (1,i,j,k); lhs = {}, rhs = {}",
                    outcome.lhs.label(),
                    outcome.rhs.label()
                ),
                json!({"lhs": outcome.lhs.label(), "rhs": outcome.rhs.label(), "holds": outcome.holds}),
            )
        });

        r.run(&format!("cf.ratio-transport.{suffix}"), || {
            let ok = ctx.o2_elems.iter().all(|u| {
                ctx.o2_elems.iter().all(|v| {
                    cf::lambda_map(&jordan_ratio(u, v, conv))
                        == jordan_ratio(&cf::lambda_map(u), &cf::lambda_map(v), conv)
                })
            });
            verdict(
                ok,
                "lambda({u:v}) = {lambda(u):lambda(v)} on all 2O pairs",
                json!({}),
            )
        });

        r.run(&format!("cf.scan.{suffix}"), || {
            let report = cf::cf_scan(conv);
            let counts_ok = report.inadmissible == SCAN_INADMISSIBLE
                && report.holds == SCAN_HOLDS
                && report.fails == SCAN_FAILS;
            let paper_in = report
                .holds_set
                .contains(&["1".into(), "i".into(), "j".into(), "k".into()]);
            verdict(
                counts_ok && paper_in,
                format!(
                    "4096 quadruples classified: {} inadmissible, {} hold, {} fail; (1,i,j,k) holds",
                    report.inadmissible, report.holds, report.fails
                ),
                report.to_json(),
            )
        });

        r.run(&format!("cf.scan.equivariance.{suffix}"), || {
            let report = cf::cf_scan(conv);
            let maps = aut_maps(&ctx.aut_q);
            let n = ctx.q.order();
            let idx_of = |x: usize, a: usize, y: usize, b: usize| ((x * n + a) * n + y) * n + b;
            let mut admissibility_ok = true;
            let mut stabilizer: Vec<u16> = Vec::new();
            let mut witness = Value::Null;
            for (aut_idx, m) in maps.iter().enumerate() {
                let mut preserves_classes = true;
                for x in 0..n {
                    for a in 0..n {
                        for y in 0..n {
                            for b in 0..n {
                                let src = report.classes[idx_of(x, a, y, b)];
                                let dst = report.classes[idx_of(
                                    m[x] as usize,
                                    m[a] as usize,
                                    m[y] as usize,
                                    m[b] as usize,
                                )];
                                if (src == CfClass::Inadmissible) != (dst == CfClass::Inadmissible) {
                                    admissibility_ok = false;
                                }
                                if src != dst && preserves_classes {
                                    preserves_classes = false;
                                    if witness.is_null() {
                                        let lbl = |t: usize| ctx.q.label(t as u16).to_string();
                                        witness = json!({
                                            "automorphism": ctx.aut_q.label(aut_idx as u16),
                                            "quadruple": [lbl(x), lbl(a), lbl(y), lbl(b)],
                                            "class": src,
                                            "image_class": dst,
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
                if preserves_classes {
                    stabilizer.push(aut_idx as u16);
                }
            }
            let stab_labels: Vec<String> = stabilizer
                .iter()
                .map(|&s| ctx.aut_q.label(s).to_string())
                .collect();
            let payload = json!({
                "admissibility_equivariant": admissibility_ok,
                "stabilizer_order": stabilizer.len(),
                "stabilizer": stab_labels,
                "witness": witness,
            });
            if stabilizer.len() == maps.len() {
                pass("the holds-set is invariant under all of Aut(Q)", payload)
            } else {
                discrepancy(
                    format!(
                        "the holds-set is NOT invariant under the componentwise Aut(Q) action: \
                         admissibility is preserved by all {} automorphisms, the full \
                         classification only by a subgroup of order {} (generated by lambda^2)",
                        maps.len(),
                        stabilizer.len()
                    ),
                    payload,
                )
            }
        });

        r.run(&format!("cf.expansion.{suffix}"), || {
            let units = catalog::lipschitz_units();
            let mut admissible = 0usize;
            let mut ok = true;
            for x in &units {
                for a in &units {
                    for y in &units {
                        for b in &units {
                            let quad = CfQuadruple::new(x.clone(), a.clone(), y.clone(), b.clone())
                                .expect("in Q");
                            match cf::ratio_expansion_check(&quad, conv) {
                                Ok(true) => admissible += 1,
                                Ok(false) => ok = false,
                                Err(_) => {}
                            }
                        }
                    }
                }
            }
            verdict(
                ok && admissible == SCAN_HOLDS + SCAN_FAILS,
                format!(
                    "bilinear expansion of the ratio of valences verified on all {admissible} admissible quadruples"
                ),
                json!({"admissible": admissible}),
            )
        });
    }

    r.run("cf.aut-preserves-specials", || {
        let maps = aut_maps(&ctx.aut_q);
        let mut specials_ok = true;
        let mut ratios_ok = true;
        for m in &maps {
            let act = |u: &Quat| cf::aut_q_action(&ctx.q, m, u);
            for s in &ctx.specials {
                if !ctx.specials.contains(&act(s)) {
                    specials_ok = false;
                }
            }
            for u in &ctx.specials {
                for v in &ctx.specials {
                    for conv in RatioConvention::BOTH {
                        if act(&jordan_ratio(u, v, conv)) != jordan_ratio(&act(u), &act(v), conv) {
                            ratios_ok = false;
                        }
                    }
                }
            }
        }
        verdict(
            specials_ok && ratios_ok,
            "every automorphism of Q permutes the 24 special elements and commutes with their Jordan ratios",
            json!({"specials_preserved": specials_ok, "ratios_covariant": ratios_ok}),
        )
    });

    r.run("cf.exercise-33i", || {
        let sigma = ctx.sigma_in_aut_q();
        let hom = GroupHom::from_generator_images(ctx.c3.clone(), ctx.aut_q.clone(), &[(1, sigma)]);
        match hom {
            Ok(h) => verdict(
                h.is_injective() && ctx.aut_q.element_order(sigma) == 3,
                "sigma -> (i j k) extends to an injective homomorphism C3 -> Aut(Q)",
                hom_json(&h),
            ),
            Err(e) => (CheckStatus::Fail, e.to_string(), json!({})),
        }
    });
}

fn sequence_checks(r: &mut Runner, ctx: &Ctx) {
    r.run("table.row.Cn", || {
        skipped(
            "the integer sequence 1 -> Z -> Z -> Z/n -> 1 is realized only through the \
             C(n) constructor; infinite groups are never materialized",
        )
    });

    r.run("table.row.symmetric", || {
        let mut orders = Vec::new();
        let mut ok = true;
        let mut fact = 1usize;
        for n in 1..=5u8 {
            fact *= n as usize;
            let g = catalog::build(CatalogName::Sym(n)).expect("Sn");
            orders.push(g.order());
            ok &= g.order() == fact;
        }
        verdict(ok, "|Sn| = n! for n = 1..5", json!({"orders": orders}))
    });

    r.run("table.row.V.iso-c2c2", || {
        let prod = direct_product("C2xC2", &ctx.c2, &ctx.c2).expect("C2xC2");
        let find_pair = |a: u16, b: u16| {
            prod.group
                .elements()
                .find(|(_, e)| e.realization == Realization::Pair(a, b))
                .unwrap()
                .0
        };
        let hom = GroupHom::from_generator_images(
            prod.group.clone(),
            ctx.v.clone(),
            &[
                (find_pair(1, 0), ctx.v_label("I")),
                (find_pair(0, 1), ctx.v_label("J")),
            ],
        );
        match hom {
            Ok(h) => verdict(
                h.is_bijective() && h.apply(find_pair(1, 1)) == ctx.v_label("K"),
                "the map (1,0) -> I, (0,1) -> J, (1,1) -> K is an isomorphism C2xC2 -> V",
                hom_json(&h),
            ),
            Err(e) => (CheckStatus::Fail, e.to_string(), json!({})),
        }
    });

    r.run("table.row.S3.split", || {
        let aut_c3 = ctx.c3.automorphism_group().expect("Aut(C3)");
        let inversion = aut_c3
            .ids()
            .find(|&g| g != aut_c3.identity())
            .expect("inversion");
        let eps = GroupHom::from_generator_images(ctx.c2.clone(), aut_c3, &[(1, inversion)])
            .expect("C2 -> Aut(C3)");
        let sd = semidirect_product("C3xC2tw", &ctx.c3, &ctx.c2, &eps).expect("C3 x| C2");
        let iso = isomorphic(&sd.group, &ctx.s3);
        // catalog-side sign map and its section
        let t12 = perm_id(&ctx.s3, &Perm::transposition(3, 0, 1)).unwrap();
        let t23 = perm_id(&ctx.s3, &Perm::transposition(3, 1, 2)).unwrap();
        let sign =
            GroupHom::from_generator_images(ctx.s3.clone(), ctx.c2.clone(), &[(t12, 1), (t23, 1)])
                .expect("sign map");
        let section = find_section(&sign).expect("surjective");
        let seq_exact = SequenceSpec::new(vec![sd.inclusion.clone(), sd.projection.clone()])
            .expect("composable")
            .is_exact()
            .exact();
        verdict(
            iso.is_some() && section.is_some() && seq_exact,
            "S3 = C3 x| C2: sequence exact, split by an explicit section",
            json!({
                "iso": iso.as_ref().map(hom_json),
                "section": section.as_ref().map(hom_json),
            }),
        )
    });

    r.run("table.row.Q.exact", || {
        let incl = ctx.c2_into(&ctx.q);
        let proj = ctx.q_onto_v();
        let report = SequenceSpec::new(vec![incl, proj]).expect("composable").is_exact();
        verdict(
            report.exact(),
            "1 -> C2 -> Q -> V -> 1 is exact",
            json!({"junctions": report.junctions.iter().map(|j| json!({"at": j.at, "exact": j.exact})).collect::<Vec<_>>()}),
        )
    });

    r.run("table.row.Q.nonsplit", || {
        let proj = ctx.q_onto_v();
        let section = find_section(&proj).expect("surjective");
        verdict(
            section.is_none(),
            "1 -> C2 -> Q -> V -> 1 admits no section (exhaustive search)",
            json!({"section_found": section.is_some()}),
        )
    });

    r.run("table.row.A4.split", || {
        let sd = v_rtimes_c3(ctx);
        let iso = isomorphic(&sd.group, &ctx.a4);
        let seq = SequenceSpec::new(vec![sd.inclusion.clone(), sd.projection.clone()])
            .expect("composable");
        let section = find_section(&sd.projection).expect("surjective");
        verdict(
            sd.group.order() == 12 && iso.is_some() && seq.is_exact().exact() && section.is_some(),
            "A4 = V x| C3: order 12, sequence exact and split",
            json!({"iso": iso.as_ref().map(hom_json)}),
        )
    });

    r.run("table.row.A4.exercise-33iii", || {
        let sd = v_rtimes_c3(ctx);
        let pair = |h: u16, k: u16| {
            sd.group
                .elements()
                .find(|(_, e)| e.realization == Realization::Pair(h, k))
                .unwrap()
                .0
        };
        // (I, sigma^2) * (I, sigma^2) = (J, sigma)
        let x = pair(ctx.v_label("I"), 2);
        let expect = pair(ctx.v_label("J"), 1);
        let got = sd.group.mul(x, x);
        verdict(
            got == expect,
            format!(
                "(I,s^2)(I,s^2) = {} (expected (J,s))",
                sd.group.label(got)
            ),
            json!({"got": sd.group.label(got), "expected": sd.group.label(expect)}),
        )
    });

    r.run("table.row.S4.split", || {
        let aut_v = ctx.v.automorphism_group().expect("Aut(V)");
        let eps = isomorphic(&ctx.s3, &aut_v).expect("S3 = Aut(V)");
        let sd = semidirect_product("VxS3", &ctx.v, &ctx.s3, &eps).expect("V x| S3");
        let iso = isomorphic(&sd.group, &ctx.s4);
        let seq = SequenceSpec::new(vec![sd.inclusion.clone(), sd.projection.clone()])
            .expect("composable");
        verdict(
            sd.group.order() == 24 && iso.is_some() && seq.is_exact().exact(),
            "S4 = V x| S3: order 24, sequence exact and split",
            json!({"iso": iso.as_ref().map(hom_json)}),
        )
    });

    r.run("table.row.2T.sequence", || {
        let incl = ctx.c2_into(&ctx.t2);
        let minus_one = ctx.minus_one(&ctx.t2);
        let (quot, proj) = ctx.t2.quotient(&[ctx.t2.identity(), minus_one]).expect("2T/C2");
        let w = isomorphic(&quot, &ctx.a4).expect("2T/C2 = A4");
        let psi = proj.then(&w).expect("composable");
        let report = SequenceSpec::new(vec![incl, psi]).expect("composable").is_exact();
        verdict(
            report.exact(),
            "1 -> C2 -> 2T -> A4 -> 1 is exact (quotient computed, A4 witnessed)",
            json!({}),
        )
    });

    r.run("table.row.2T.semidirect", || {
        let sigma = ctx.sigma_in_aut_q();
        let eps = GroupHom::from_generator_images(ctx.c3.clone(), ctx.aut_q.clone(), &[(1, sigma)])
            .expect("C3 -> Aut(Q)");
        let sd = semidirect_product("QxC3", &ctx.q, &ctx.c3, &eps).expect("Q x| C3");
        let iso = isomorphic(&sd.group, &ctx.t2);
        // split on the catalog side: section of 2T -> 2T/Q = C3
        let q_ids: Vec<u16> = catalog::lipschitz_units()
            .iter()
            .map(|u| catalog::quat_id(&ctx.t2, u).unwrap())
            .collect();
        let (quot, proj) = ctx.t2.quotient(&q_ids).expect("2T/Q");
        let c3_iso = isomorphic(&quot, &ctx.c3).expect("2T/Q = C3");
        let psi = proj.then(&c3_iso).expect("composable");
        let section = find_section(&psi).expect("surjective");
        verdict(
            iso.is_some() && section.is_some(),
            "2T = Q x| C3: the semidirect construction is isomorphic to 2T and 2T -> C3 splits",
            json!({
                "iso": iso.as_ref().map(hom_json),
                "section": section.as_ref().map(hom_json),
            }),
        )
    });

    r.run("table.row.2O.c2-sequence", || {
        let incl = ctx.c2_into(&ctx.o2);
        let minus_one = ctx.minus_one(&ctx.o2);
        let (quot, proj) = ctx.o2.quotient(&[ctx.o2.identity(), minus_one]).expect("2O/C2");
        let exact = SequenceSpec::new(vec![incl, proj]).expect("composable").is_exact().exact();
        let as_s4 = isomorphic(&quot, &ctx.s4);
        let as_t2 = isomorphic(&quot, &ctx.t2);
        let payload = json!({
            "exact": exact,
            "quotient_order": quot.order(),
            "iso_to_S4": as_s4.as_ref().map(hom_json),
            "iso_to_2T": as_t2.is_some(),
            "quotient_order_profile": quot.order_profile(),
            "2T_order_profile": ctx.t2.order_profile(),
        });
        if exact && as_t2.is_none() && as_s4.is_some() {
            discrepancy(
                "1 -> C2 -> 2O -> (2O/C2) -> 1 is exact, but the printed quotient 2T is wrong: \
                 the computed quotient is isomorphic to S4 and not to 2T (2T has a single \
                 involution, the quotient has nine)",
                payload,
            )
        } else {
            verdict(
                exact && as_t2.is_some(),
                "1 -> C2 -> 2O -> 2T -> 1 with the printed quotient",
                payload,
            )
        }
    });

    r.run("table.row.2O.q-sequence", || {
        let incl = ctx.q_in_o2();
        let (quot, proj) = ctx.o2.quotient(&incl.image()).expect("2O/Q");
        let w = isomorphic(&quot, &ctx.s3).expect("2O/Q = S3");
        let psi = proj.then(&w).expect("composable");
        let report = SequenceSpec::new(vec![incl, psi]).expect("composable").is_exact();
        verdict(
            report.exact(),
            "1 -> Q -> 2O -> S3 -> 1 is exact",
            json!({}),
        )
    });

    r.run("table.row.2O.q-nonsplit", || {
        let incl = ctx.q_in_o2();
        let (quot, proj) = ctx.o2.quotient(&incl.image()).expect("2O/Q");
        let w = isomorphic(&quot, &ctx.s3).expect("2O/Q = S3");
        let psi = proj.then(&w).expect("composable");
        let section = find_section(&psi).expect("surjective");
        verdict(
            section.is_none(),
            "1 -> Q -> 2O -> S3 -> 1 admits no section (exhaustive search; the only \
             involution of 2O is central)",
            json!({"section_found": section.is_some()}),
        )
    });

    r.run("catalog.decomposition", || {
        let hurwitz = catalog::hurwitz_units();
        let disjoint = ctx.specials.iter().all(|s| !hurwitz.contains(s));
        let closed = ctx.o2_elems.iter().all(|u| {
            ctx.o2_elems
                .iter()
                .all(|v| ctx.o2_elems.contains(&u.mul(v)))
        });
        let ok = ctx.q.order() == 8
            && ctx.t2.order() == 24
            && ctx.o2.order() == 48
            && ctx.specials.len() == 24
            && hurwitz.len() + ctx.specials.len() == ctx.o2_elems.len()
            && disjoint
            && closed;
        verdict(
            ok,
            "|Q| = 8, |2T| = 24, |2O| = 48 = 24 + 24 disjoint, and 2O is closed under \
             multiplication (exhaustive 48x48)",
            json!({
                "orders": {"Q": ctx.q.order(), "2T": ctx.t2.order(), "2O": ctx.o2.order()},
                "specials": ctx.specials.len(),
                "disjoint": disjoint,
                "closed": closed,
            }),
        )
    });

    r.run("catalog.2O.closure-crosscheck", || {
        let gen = Quat::from_ints(1, 1, 0, 0).scale(&ScalarQ::inv_sqrt2());
        let (by_closure, mut elems) = FiniteGroup::from_closure(
            "2O'",
            &[Quat::i(), gen],
            crate::group::DEFAULT_CLOSURE_CAP,
        )
        .expect("closure");
        elems.sort();
        let mut union = ctx.o2_elems.clone();
        union.sort();
        verdict(
            by_closure.order() == 48 && elems == union,
            "the explicit union equals the closure of {i, (1+i)/sqrt2}",
            json!({"closure_order": by_closure.order()}),
        )
    });

    r.run("catalog.hurwitz-index3", || {
        let q_ids: Vec<u16> = catalog::lipschitz_units()
            .iter()
            .map(|u| catalog::quat_id(&ctx.t2, u).unwrap())
            .collect();
        let normal = ctx.t2.is_normal(&q_ids).unwrap_or(false);
        verdict(
            normal && ctx.t2.order() / q_ids.len() == 3,
            "Q is a normal subgroup of the Hurwitz units with index 3",
            json!({"normal": normal, "index": ctx.t2.order() / q_ids.len()}),
        )
    });
}

fn v_rtimes_c3(ctx: &Ctx) -> crate::group::Semidirect {
    let aut_v = ctx.v.automorphism_group().expect("Aut(V)");
    let cycle: Vec<u16> = {
        // the automorphism of V cycling I -> J -> K -> I
        let (one, i, j, k) = (
            ctx.v_label("1"),
            ctx.v_label("I"),
            ctx.v_label("J"),
            ctx.v_label("K"),
        );
        let mut m = vec![0u16; 4];
        m[one as usize] = one;
        m[i as usize] = j;
        m[j as usize] = k;
        m[k as usize] = i;
        m
    };
    let cyc_id = catalog::aut_id(&aut_v, &cycle).expect("cycle in Aut(V)");
    let eps = GroupHom::from_generator_images(ctx.c3.clone(), aut_v, &[(1, cyc_id)])
        .expect("C3 -> Aut(V)");
    semidirect_product("VxC3", &ctx.v, &ctx.c3, &eps).expect("V x| C3")
}

fn aut_checks(r: &mut Runner, ctx: &Ctx) {
    r.run("aut.Q", || {
        let ok = ctx.aut_q.order() == 24;
        let iso = isomorphic(&ctx.aut_q, &ctx.s4);
        verdict(
            ok && iso.is_some(),
            format!("Aut(Q) has order {} and is isomorphic to S4", ctx.aut_q.order()),
            json!({"order": ctx.aut_q.order(), "iso": iso.as_ref().map(hom_json)}),
        )
    });

    r.run("aut.Q.inner", || {
        let (inn, hom) = ctx.q.inner_automorphism_group().expect("In(Q)");
        let iso = isomorphic(&inn, &ctx.v);
        verdict(
            inn.order() == 4 && iso.is_some() && hom.is_surjective(),
            "In(Q) has order 4 and is the Vierergruppe V",
            json!({"order": inn.order()}),
        )
    });

    r.run("aut.V", || {
        let aut_v = ctx.v.automorphism_group().expect("Aut(V)");
        let iso = isomorphic(&aut_v, &ctx.s3);
        verdict(
            aut_v.order() == 6 && iso.is_some(),
            "Aut(V) has order 6 and is isomorphic to S3 (permutations of I, J, K)",
            json!({"order": aut_v.order()}),
        )
    });

    r.run("aut.2T", || {
        let aut = ctx.t2.automorphism_group().expect("Aut(2T)");
        let iso = isomorphic(&aut, &ctx.s4);
        verdict(
            aut.order() == 24 && iso.is_some(),
            format!("Aut(2T) has order {} and is isomorphic to S4", aut.order()),
            json!({"order": aut.order(), "iso": iso.as_ref().map(hom_json)}),
        )
    });

    r.run("aut.2O.computed", || {
        let aut = ctx.o2.automorphism_group().expect("Aut(2O)");
        let c2s4 = direct_product("C2xS4", &ctx.c2, &ctx.s4).expect("C2xS4").group;
        let iso = isomorphic(&aut, &c2s4);
        verdict(
            aut.order() == 48 && iso.is_some(),
            format!(
                "Aut(2O) computed outright: order {}, isomorphic to C2 x S4 (witness attached)",
                aut.order()
            ),
            json!({
                "order": aut.order(),
                "order_profile": aut.order_profile(),
                "iso_to_C2xS4": iso.as_ref().map(hom_json),
            }),
        )
    });

    r.run("aut.2O.claim", || {
        let aut = ctx.o2.automorphism_group().expect("Aut(2O)");
        let c2t2 = direct_product("C2x2T", &ctx.c2, &ctx.t2).expect("C2x2T").group;
        let claimed = isomorphic(&aut, &c2t2);
        let payload = json!({
            "aut_order": aut.order(),
            "aut_order_profile": aut.order_profile(),
            "C2x2T_order_profile": c2t2.order_profile(),
            "iso_to_C2x2T": claimed.is_some(),
        });
        if claimed.is_some() {
            pass("Aut(2O) is isomorphic to C2 x 2T as claimed", payload)
        } else {
            discrepancy(
                "the claim Aut(2O) = C2 x 2T fails: both have order 48, but the order \
                 profiles differ (C2 x 2T has 3 involutions, Aut(2O) has 19); the computed \
                 type is C2 x S4 — exhaustion over fingerprint-pruned generator images",
                payload,
            )
        }
    });

    r.run("aut.inner-normal", || {
        let mut ok = true;
        let mut checked = Vec::new();
        for (name, g) in [
            ("Q", &ctx.q),
            ("V", &ctx.v),
            ("S3", &ctx.s3),
            ("2T", &ctx.t2),
            ("2O", &ctx.o2),
        ] {
            let aut = g.automorphism_group().expect("aut");
            let (inn, _) = g.inner_automorphism_group().expect("inn");
            let inner_ids: Vec<u16> = inn
                .elements()
                .map(|(_, e)| {
                    aut.elements()
                        .find(|(_, a)| a.realization == e.realization)
                        .expect("inner map inside Aut")
                        .0
                })
                .collect();
            ok &= aut.is_normal(&inner_ids).unwrap_or(false);
            checked.push(json!({"group": name, "inner_order": inn.order(), "aut_order": aut.order()}));
        }
        verdict(
            ok,
            "In(G) is a normal subgroup of Aut(G) for Q, V, S3, 2T, 2O (exhaustive)",
            Value::Array(checked),
        )
    });

    r.run("aut.inner-trivial-abelian", || {
        let (inn_v, _) = ctx.v.inner_automorphism_group().expect("In(V)");
        let c3 = &ctx.c3;
        let (inn_c3, _) = c3.inner_automorphism_group().expect("In(C3)");
        verdict(
            inn_v.order() == 1 && inn_c3.order() == 1,
            "inner automorphism groups of commutative groups are trivial (V, C3)",
            json!({}),
        )
    });

    r.run("aut.inner-S3", || {
        let (inn, _) = ctx.s3.inner_automorphism_group().expect("In(S3)");
        let iso = isomorphic(&inn, &ctx.s3);
        verdict(
            inn.order() == 6 && iso.is_some(),
            "In(S3) has order 6 (S3 is centerless)",
            json!({"order": inn.order()}),
        )
    });
}

fn braid_checks(r: &mut Runner, ctx: &Ctx) {
    let w = |s: &str| parse_braid(s).expect("braid word");

    r.run("braid.relation", || {
        let ok = braid::burau(&w("aba")) == braid::burau(&w("bab"));
        verdict(ok, "burau(aba) = burau(bab)", json!({}))
    });

    r.run("braid.fulltwist.words", || {
        let ok = braid::braid_equal(&w("abaaba"), &w("ababab")) && full_twist(1) == w("abaaba");
        verdict(ok, "(aba)^2 = (ab)^3 and full_twist(1) = abaaba", json!({}))
    });

    r.run("braid.fulltwist.central", || {
        let ft = braid::burau(&full_twist(1));
        let ok = ["a", "b"].iter().all(|g| {
            let m = braid::burau(&w(g));
            ft.mul(&m) == m.mul(&ft)
        });
        verdict(
            ok,
            "the Burau image of the full twist commutes with both generator images (it is t^3 I)",
            json!({"full_twist_burau": braid::burau(&full_twist(1)).to_json()}),
        )
    });

    r.run("braid.sl2.fulltwist", || {
        let minus_i = IntMat::identity().neg();
        let ok = braid::sl2_image(&w("ababab")) == minus_i
            && braid::sl2_image(&full_twist(2)) == IntMat::identity();
        verdict(
            ok,
            "sl2((ab)^3) = -I and sl2((ab)^6) = I",
            json!({
                "ab3": braid::sl2_image(&w("ababab")).to_json(),
                "ab6": braid::sl2_image(&full_twist(2)).to_json(),
            }),
        )
    });

    r.run("braid.sl2.generators", || {
        let ok = braid::sl2_image(&w("a")) == IntMat::from_ints(1, 1, 0, 1)
            && braid::sl2_image(&w("B")) == IntMat::from_ints(1, 0, 1, 1);
        verdict(
            ok,
            "a and b^-1 evaluate to the standard Sl2(Z) generators [[1,1],[0,1]] and [[1,0],[1,1]]",
            json!({
                "a": braid::sl2_image(&w("a")).to_json(),
                "b_inv": braid::sl2_image(&w("B")).to_json(),
            }),
        )
    });

    r.run("braid.permutation", || {
        let ok = braid::braid_permutation(&w("a")).cycle_label() == "(1 2)"
            && braid::braid_permutation(&w("b")).cycle_label() == "(2 3)"
            && braid::braid_permutation(&w("aba")).cycle_label() == "(1 3)"
            && braid::braid_permutation(&full_twist(1)).cycle_label() == "e";
        verdict(
            ok,
            "strand permutations: a -> (1 2), b -> (2 3), aba -> (1 3), full twist -> e",
            json!({}),
        )
    });

    r.run("braid.composite-s3", || {
        // fix the isomorphism Sl2(F2) -> S3 on the generator images of a, b
        let ma = braid::sl2_image(&w("a")).mod_p(2);
        let mb = braid::sl2_image(&w("b")).mod_p(2);
        let ga = mat_id(&ctx.sl2_2, &ma).expect("a mod 2 in SL2(F2)");
        let gb = mat_id(&ctx.sl2_2, &mb).expect("b mod 2 in SL2(F2)");
        let t12 = perm_id(&ctx.s3, &Perm::transposition(3, 0, 1)).unwrap();
        let t23 = perm_id(&ctx.s3, &Perm::transposition(3, 1, 2)).unwrap();
        let iso = GroupHom::from_generator_images(
            ctx.sl2_2.clone(),
            ctx.s3.clone(),
            &[(ga, t12), (gb, t23)],
        );
        match iso {
            Ok(iso) if iso.is_bijective() => {
                let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_B3);
                let mut ok = true;
                for _ in 0..100 {
                    let len = rng.gen_range(0..14);
                    let word = random_braid_word(&mut rng, len);
                    let via_matrix = {
                        let m = braid::sl2_image(&word).mod_p(2);
                        let id = mat_id(&ctx.sl2_2, &m).expect("det-1 matrix mod 2");
                        iso.apply(id)
                    };
                    let direct = perm_id(&ctx.s3, &braid::braid_permutation(&word)).unwrap();
                    ok &= via_matrix == direct;
                }
                verdict(
                    ok,
                    "B3 -> Sl2(Z) -> Sl2(F2) = S3 agrees with the strand permutation on 100 random words (seed 0x5EEDB3)",
                    json!({"iso": hom_json(&iso)}),
                )
            }
            _ => (
                CheckStatus::Fail,
                "no isomorphism Sl2(F2) -> S3 matching the braid generators".into(),
                json!({}),
            ),
        }
    });

    r.run("braid.kernel.claim", || {
        let t1 = braid::sl2_image(&full_twist(1));
        let t2 = braid::sl2_image(&full_twist(2));
        let minus_i = IntMat::identity().neg();
        let payload = json!({
            "full_twist_sl2": t1.to_json(),
            "full_twist_squared_sl2": t2.to_json(),
        });
        if t1 == IntMat::identity() {
            pass("the full twist maps to the identity in Sl2(Z)", payload)
        } else {
            discrepancy(
                "the displayed kernel statement for 1 -> Z -> B3 -> Sl2(Z) -> 1 fails as printed: \
                 the full twist t(1) evaluates to -I, not I; its square evaluates to I, so the \
                 kernel of the evaluation is generated by the square of the full twist",
                json!({
                    "full_twist_is_minus_identity": t1 == minus_i,
                    "payload": payload,
                }),
            )
        }
    });
}

fn matrix_checks(r: &mut Runner, ctx: &Ctx) {
    r.run("matrix.sl2f2.iso-s3", || {
        let iso = isomorphic(&ctx.sl2_2, &ctx.s3);
        verdict(
            ctx.sl2_2.order() == 6 && iso.is_some(),
            "Sl2(F2) has order 6 and is isomorphic to S3",
            json!({"order": ctx.sl2_2.order(), "iso": iso.as_ref().map(hom_json)}),
        )
    });

    r.run("matrix.sl2f3.iso-2t", || {
        let iso = isomorphic(&ctx.sl2_3, &ctx.t2);
        verdict(
            ctx.sl2_3.order() == 24 && iso.is_some(),
            "Sl2(F3) has order 24 and is isomorphic to 2T",
            json!({"order": ctx.sl2_3.order(), "iso": iso.as_ref().map(hom_json)}),
        )
    });

    r.run("matrix.sl2f5.order", || {
        verdict(
            ctx.sl2_5.order() == 120,
            "Sl2(F5) has order 120 (constructor only; no isomorphism target in scope)",
            json!({"order": ctx.sl2_5.order()}),
        )
    });
}

fn jordan_checks(r: &mut Runner, ctx: &Ctx, conventions: &[RatioConvention]) {
    r.run("jordan.products", || {
        let one = Quat::one();
        let ok = jordan_product(&one, &one) == one
            && [Quat::i(), Quat::j(), Quat::k()]
                .iter()
                .all(|u| jordan_product(u, u) == -&one)
            && jordan_product(&Quat::i(), &Quat::j()).is_zero()
            && jordan_product(&Quat::j(), &Quat::k()).is_zero()
            && jordan_product(&Quat::k(), &Quat::i()).is_zero();
        verdict(
            ok,
            "{1,1} = 1, {i,i} = {j,j} = {k,k} = -1, {i,j} = {j,k} = {k,i} = 0",
            json!({}),
        )
    });

    r.run("jordan.antihom", || {
        let ok = ctx.o2_elems.iter().all(|u| {
            ctx.o2_elems
                .iter()
                .all(|v| u.mul(v).conj() == v.conj().mul(&u.conj()))
        });
        verdict(ok, "(uv)* = v* u* on all 48x48 pairs of 2O", json!({}))
    });

    for &conv in conventions {
        let suffix = conv.as_str();

        r.run(&format!("jordan.conj-transport.{suffix}"), || {
            let ok = ctx.o2_elems.iter().all(|u| {
                ctx.o2_elems.iter().all(|v| {
                    jordan_ratio(u, v, conv).conj() == jordan_ratio(&u.conj(), &v.conj(), conv)
                })
            });
            verdict(ok, "{u:v}* = {u*:v*} on all 2O pairs", json!({}))
        });

        r.run(&format!("jordan.bilinearity.{suffix}"), || {
            let increments = [Quat::one(), Quat::i(), Quat::j(), Quat::k()];
            let mut ok = true;
            for u in &ctx.o2_elems {
                for v in &ctx.o2_elems {
                    for d in &increments {
                        let left = jordan_ratio(&(u + d), v, conv);
                        let split = &jordan_ratio(u, v, conv) + &jordan_ratio(d, v, conv);
                        ok &= left == split;
                        let right = jordan_ratio(u, &(v + d), conv);
                        let split2 = &jordan_ratio(u, v, conv) + &jordan_ratio(u, d, conv);
                        ok &= right == split2;
                    }
                }
            }
            // plus random Q(sqrt2) quaternions
            let mut rng = ChaCha8Rng::seed_from_u64(0xB111);
            for _ in 0..200 {
                let (u, v, d) = (
                    random_unit_quat(&mut rng),
                    random_unit_quat(&mut rng),
                    random_unit_quat(&mut rng),
                );
                ok &= jordan_ratio(&(&u + &d), &v, conv)
                    == &jordan_ratio(&u, &v, conv) + &jordan_ratio(&d, &v, conv);
            }
            verdict(
                ok,
                "the ratio is additive in both arguments (exhaustive 2O pairs with basis \
                 increments, plus 200 random quaternions, seed 0xB111)",
                json!({}),
            )
        });
    }

    r.run("jordan.norm-mult", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x42A);
        let mut ok = true;
        for _ in 0..1000 {
            let u = random_unit_quat(&mut rng);
            let v = random_unit_quat(&mut rng);
            ok &= u.mul(&v).norm2() == &u.norm2() * &v.norm2();
        }
        verdict(
            ok,
            "|uv|^2 = |u|^2 |v|^2 on 1000 random pairs (seed 0x42A)",
            json!({}),
        )
    });

    r.run("jordan.nonassociativity", || {
        let lhs = jordan_product(&Quat::i(), &jordan_product(&Quat::j(), &Quat::j()));
        let rhs = jordan_product(&jordan_product(&Quat::i(), &Quat::j()), &Quat::j());
        verdict(
            lhs != rhs,
            format!(
                "witness triple (i, j, j): {{i,{{j,j}}}} = {} but {{{{i,j}},j}} = {}",
                lhs.label(),
                rhs.label()
            ),
            json!({"triple": ["i", "j", "j"], "left": lhs.label(), "right": rhs.label()}),
        )
    });

    r.run("jordan.ratio-identity.claim", || {
        // corrected identity: {u, v*} = |v|^2 {u, v^{-1}}
        let mut rng = ChaCha8Rng::seed_from_u64(0x1DE);
        let mut corrected_ok = true;
        for _ in 0..1000 {
            let u = random_unit_quat(&mut rng);
            let mut v = random_unit_quat(&mut rng);
            if v.is_zero() {
                v = Quat::one();
            }
            let lhs = jordan_product(&u, &v.conj());
            let rhs = jordan_product(&u, &v.inv().expect("nonzero")).scale(&v.norm2());
            corrected_ok &= lhs == rhs;
        }
        // printed form with the inverted exponent fails already at v = 2
        let u = Quat::one();
        let v = Quat::scalar(ScalarQ::from_int(2));
        let printed_lhs = jordan_product(&u, &v.conj());
        let printed_rhs = jordan_product(&u, &v.inv().expect("nonzero"))
            .scale(&v.norm2().inv().expect("nonzero"));
        let printed_fails = printed_lhs != printed_rhs;
        let payload = json!({
            "corrected_identity_holds": corrected_ok,
            "printed_witness": {
                "u": u.label(),
                "v": v.label(),
                "lhs": printed_lhs.label(),
                "printed_rhs": printed_rhs.label(),
            },
        });
        if corrected_ok && printed_fails {
            discrepancy(
                "the printed identity {u:v} = {u,v*} = |v|^{-2}{u,v^{-1}} has the exponent \
                 inverted: v* = |v|^2 v^{-1}, so {u,v*} = |v|^2 {u,v^{-1}} (verified on 1000 \
                 random nonzero quaternions, seed 0x1DE); witness v = 2 attached",
                payload,
            )
        } else {
            verdict(
                corrected_ok,
                "ratio identity behaves as printed",
                payload,
            )
        }
    });

}
