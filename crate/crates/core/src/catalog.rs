//! Named constructions of the small groups the toolkit works with,
//! realized concretely: quaternion unit groups, symmetric and
//! alternating groups as permutations, cyclic groups as residues, and
//! Sl2 over small prime fields by matrix enumeration.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup, Mat2Fp, Perm, Realization};
use crate::quat::Quat;
use crate::scalar::{Rat, ScalarQ};

/// Largest cyclic group the table-based engine will materialize.
const MAX_CYCLIC: u32 = 1024;

/// Names of the catalog groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogName {
    /// Cyclic group of order n (residues mod n).
    Cyclic(u32),
    /// Symmetric group on n points, n <= 5.
    Sym(u8),
    /// Klein Vierergruppe {1, I, J, K}, realized as the inner
    /// automorphisms of Q.
    V,
    /// Lipschitz unit quaternions {+-1, +-i, +-j, +-k}.
    Q,
    /// Alternating group on 4 points.
    A4,
    /// Binary tetrahedral group 2T: the 24 Hurwitz units.
    T2,
    /// Binary octahedral group 2O: 2T plus the 24 special elements.
    O2,
    /// Sl2 over F_p, p in {2, 3, 5}.
    Sl2(u8),
}

impl CatalogName {
    pub fn canonical(&self) -> String {
        match self {
            CatalogName::Cyclic(n) => format!("C{n}"),
            CatalogName::Sym(n) => format!("S{n}"),
            CatalogName::V => "V".into(),
            CatalogName::Q => "Q".into(),
            CatalogName::A4 => "A4".into(),
            CatalogName::T2 => "2T".into(),
            CatalogName::O2 => "2O".into(),
            CatalogName::Sl2(p) => format!("SL2({p})"),
        }
    }
}

impl FromStr for CatalogName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '.' && *c != '*')
            .collect::<String>()
            .to_uppercase();
        match t.as_str() {
            "V" => return Ok(CatalogName::V),
            "Q" => return Ok(CatalogName::Q),
            "A4" => return Ok(CatalogName::A4),
            "2T" | "T2" => return Ok(CatalogName::T2),
            "2O" | "O2" => return Ok(CatalogName::O2),
            _ => {}
        }
        if let Some(rest) = t.strip_prefix("SL2") {
            let digits = rest.trim_start_matches(['(', '_']).trim_end_matches(')');
            let p: u8 = digits
                .parse()
                .map_err(|_| Error::UnknownName(s.to_string()))?;
            if ![2, 3, 5].contains(&p) {
                return Err(Error::Unsupported(format!(
                    "SL2 is only built over F_2, F_3 and F_5, not F_{p}"
                )));
            }
            return Ok(CatalogName::Sl2(p));
        }
        if let Some(digits) = t.strip_prefix('S') {
            if let Ok(n) = digits.parse::<u8>() {
                if n == 0 || n > 5 {
                    return Err(Error::Unsupported(format!(
                        "symmetric groups are capped at S5, got S{n}"
                    )));
                }
                return Ok(CatalogName::Sym(n));
            }
        }
        if let Some(digits) = t.strip_prefix('C') {
            if let Ok(n) = digits.parse::<u32>() {
                if n == 0 {
                    return Err(Error::UnknownName(s.to_string()));
                }
                if n > MAX_CYCLIC {
                    return Err(Error::Unsupported(format!(
                        "cyclic groups are materialized up to C{MAX_CYCLIC}, got C{n}"
                    )));
                }
                return Ok(CatalogName::Cyclic(n));
            }
        }
        Err(Error::UnknownName(s.to_string()))
    }
}

fn half() -> ScalarQ {
    ScalarQ::new(Rat::new(1, 2).unwrap(), Rat::zero())
}

/// The eight Lipschitz units {+-1, +-i, +-j, +-k}.
pub fn lipschitz_units() -> Vec<Quat> {
    let mut v = Vec::with_capacity(8);
    for idx in 0..4 {
        let e = Quat::basis(idx);
        v.push(e.clone());
        v.push(-&e);
    }
    v
}

/// The 24 Hurwitz units: Q plus the sixteen (±1±i±j±k)/2.
pub fn hurwitz_units() -> Vec<Quat> {
    let mut v = lipschitz_units();
    for mask in 0..16u32 {
        let sgn = |bit: u32| if mask >> bit & 1 == 0 { 1 } else { -1 };
        v.push(Quat::from_ints(sgn(0), sgn(1), sgn(2), sgn(3)).scale(&half()));
    }
    v
}

/// The 24 special elements: exactly two coordinates nonzero, both
/// +-2^{-1/2}.
pub fn special_elements() -> Vec<Quat> {
    let c = ScalarQ::inv_sqrt2();
    let mut v = Vec::with_capacity(24);
    for hi in 0..4 {
        for lo in 0..hi {
            for (s1, s2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut coords = [
                    ScalarQ::zero(),
                    ScalarQ::zero(),
                    ScalarQ::zero(),
                    ScalarQ::zero(),
                ];
                coords[lo] = if s1 > 0 { c.clone() } else { -&c };
                coords[hi] = if s2 > 0 { c.clone() } else { -&c };
                v.push(Quat::new(coords));
            }
        }
    }
    v
}

/// All 48 elements of the binary octahedral group.
pub fn binary_octahedral_elements() -> Vec<Quat> {
    let mut v = hurwitz_units();
    v.extend(special_elements());
    v
}

/// Id of a quaternion-realized element inside a group, if present.
pub fn quat_id(group: &FiniteGroup, q: &Quat) -> Option<u16> {
    group
        .elements()
        .find(|(_, e)| matches!(&e.realization, Realization::Quaternion(r) if r == q))
        .map(|(id, _)| id)
}

/// Id of the automorphism with the given image vector, if present.
pub fn aut_id(aut_group: &FiniteGroup, images: &[u16]) -> Option<u16> {
    aut_group
        .elements()
        .find(|(_, e)| matches!(&e.realization, Realization::AutMap(m) if m == images))
        .map(|(id, _)| id)
}

/// Finds the automorphism in `aut` (a group of automorphism maps of
/// `parent`) acting as prescribed on the given (element, image) pairs.
pub fn find_automorphism(
    aut: &FiniteGroup,
    parent: &FiniteGroup,
    action: &[(Quat, Quat)],
) -> Option<u16> {
    let pairs: Vec<(u16, u16)> = action
        .iter()
        .map(|(from, to)| (quat_id(parent, from).unwrap(), quat_id(parent, to).unwrap()))
        .collect();
    aut.elements()
        .find(|(_, e)| {
            matches!(&e.realization, Realization::AutMap(m)
                if pairs.iter().all(|&(f, t)| m[f as usize] == t))
        })
        .map(|(id, _)| id)
}

fn all_permutations(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut current: Vec<u8> = Vec::new();
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<u8>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if current.len() == n {
            out.push(Perm(current.clone()));
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                current.push(x as u8);
                rec(n, current, used, out);
                current.pop();
                used[x] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

fn build_cyclic(n: u32) -> Result<FiniteGroup> {
    let elems: Vec<Element> = (0..n)
        .map(|v| Element {
            label: v.to_string(),
            realization: Realization::Residue {
                value: v,
                modulus: n,
            },
        })
        .collect();
    let nn = n as usize;
    let mut table = vec![0u16; nn * nn];
    for a in 0..nn {
        for b in 0..nn {
            table[a * nn + b] = ((a + b) % nn) as u16;
        }
    }
    FiniteGroup::from_table(format!("C{n}"), elems, table)
}

fn build_v() -> Result<FiniteGroup> {
    let q = build(CatalogName::Q)?;
    let (inn, _) = q.inner_automorphism_group()?;
    // label each conjugation map by the unit inducing it
    let units = [
        (Quat::one(), "1"),
        (Quat::i(), "I"),
        (Quat::j(), "J"),
        (Quat::k(), "K"),
    ];
    let mut labels = vec![String::new(); inn.order()];
    for (u, name) in units {
        let uid = quat_id(&q, &u).unwrap();
        let images: Vec<u16> = q
            .ids()
            .map(|g| q.conjugate(g, uid))
            .collect();
        let id = aut_id(&inn, &images).expect("conjugation map must be present");
        labels[id as usize] = name.to_string();
    }
    Ok(inn.with_labels(labels).with_name("V"))
}

fn build_sl2(p: u8) -> Result<FiniteGroup> {
    let mut mats = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let m = Mat2Fp::new(p, [a, b, c, d]);
                    if m.det() == 1 {
                        mats.push(m);
                    }
                }
            }
        }
    }
    let (g, _) = FiniteGroup::from_concrete_set(format!("SL2({p})"), mats)?;
    Ok(g)
}

/// Builds a catalog group by name.
pub fn build(name: CatalogName) -> Result<FiniteGroup> {
    match name {
        CatalogName::Cyclic(n) => build_cyclic(n),
        CatalogName::Sym(n) => {
            if n == 0 || n > 5 {
                return Err(Error::Unsupported(format!("S{n} is out of range")));
            }
            let perms = all_permutations(n as usize);
            let (g, _) = FiniteGroup::from_concrete_set(format!("S{n}"), perms)?;
            Ok(g)
        }
        CatalogName::V => build_v(),
        CatalogName::Q => {
            let (g, _) = FiniteGroup::from_concrete_set("Q", lipschitz_units())?;
            Ok(g)
        }
        CatalogName::A4 => {
            let perms: Vec<Perm> = all_permutations(4).into_iter().filter(Perm::is_even).collect();
            let (g, _) = FiniteGroup::from_concrete_set("A4", perms)?;
            Ok(g)
        }
        CatalogName::T2 => {
            let (g, _) = FiniteGroup::from_concrete_set("2T", hurwitz_units())?;
            Ok(g)
        }
        CatalogName::O2 => {
            let (g, _) = FiniteGroup::from_concrete_set("2O", binary_octahedral_elements())?;
            Ok(g)
        }
        CatalogName::Sl2(p) => build_sl2(p),
    }
}

/// One line per catalog name: canonical name, order, realization kind.
pub fn list_lines() -> Vec<String> {
    vec![
        "Cn      order n     residues mod n (n <= 1024)".to_string(),
        "S2..S5  order n!    permutations".to_string(),
        "V       order 4     inner automorphisms of Q (Klein Vierergruppe)".to_string(),
        "Q       order 8     Lipschitz unit quaternions".to_string(),
        "A4      order 12    even permutations of 4 points".to_string(),
        "2T      order 24    Hurwitz unit quaternions (binary tetrahedral)".to_string(),
        "2O      order 48    binary octahedral unit quaternions".to_string(),
        "SL2(2)  order 6     2x2 matrices over F_2, det 1".to_string(),
        "SL2(3)  order 24    2x2 matrices over F_3, det 1".to_string(),
        "SL2(5)  order 120   2x2 matrices over F_5, det 1".to_string(),
    ]
}

/// Isomorphism type label for small subgroups: cyclic groups are named
/// C{n}; other orders are matched against the catalog.
pub fn iso_type_label(group: &FiniteGroup) -> Option<String> {
    if group.minimal_generating_sequence().len() == 1 {
        return Some(format!("C{}", group.order()));
    }
    let candidates: &[CatalogName] = match group.order() {
        4 => &[CatalogName::V],
        6 => &[CatalogName::Sym(3)],
        8 => &[CatalogName::Q],
        12 => &[CatalogName::A4],
        24 => &[CatalogName::Sym(4), CatalogName::T2],
        48 => &[CatalogName::O2],
        _ => &[],
    };
    for &cand in candidates {
        if let Ok(target) = build(cand) {
            if crate::search::isomorphic(group, &target).is_some() {
                return Some(cand.canonical());
            }
        }
    }
    None
}

/// DOT digraph of the subgroup lattice: nodes are subgroups labeled by
/// order (and isomorphism type when identified), edges are maximal
/// containments.
pub fn lattice_dot(group: &FiniteGroup) -> Result<String> {
    let subs = group.subgroups()?;
    let mut labels = Vec::with_capacity(subs.len());
    for (idx, sub) in subs.iter().enumerate() {
        let as_group = group.subgroup_group(sub, format!("H{idx}"))?;
        let ty = if sub.len() <= 24 || sub.len() == group.order() {
            iso_type_label(&as_group)
        } else {
            None
        };
        let label = match ty {
            Some(t) => format!("order {}\\n{}", sub.len(), t),
            None => format!("order {}", sub.len()),
        };
        labels.push(label);
    }
    let contains = |big: &Vec<u16>, small: &Vec<u16>| small.iter().all(|x| big.binary_search(x).is_ok());
    let mut out = String::new();
    out.push_str(&format!("digraph \"{} subgroups\" {{\n", group.name()));
    out.push_str("  rankdir=BT;\n");
    for (idx, label) in labels.iter().enumerate() {
        out.push_str(&format!("  H{idx} [label=\"{label}\"];\n"));
    }
    for (i, small) in subs.iter().enumerate() {
        for (j, big) in subs.iter().enumerate() {
            if i == j || small.len() >= big.len() || !contains(big, small) {
                continue;
            }
            let maximal = !subs.iter().enumerate().any(|(k, mid)| {
                k != i
                    && k != j
                    && mid.len() > small.len()
                    && mid.len() < big.len()
                    && contains(mid, small)
                    && contains(big, mid)
            });
            if maximal {
                out.push_str(&format!("  H{i} -> H{j};\n"));
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CLOSURE_CAP;
    use crate::search::isomorphic;

    #[test]
    fn orders() {
        assert_eq!(build(CatalogName::Q).unwrap().order(), 8);
        assert_eq!(build(CatalogName::V).unwrap().order(), 4);
        assert_eq!(build(CatalogName::A4).unwrap().order(), 12);
        assert_eq!(build(CatalogName::T2).unwrap().order(), 24);
        assert_eq!(build(CatalogName::O2).unwrap().order(), 48);
        assert_eq!(build(CatalogName::Sym(5)).unwrap().order(), 120);
        assert_eq!(build(CatalogName::Sl2(2)).unwrap().order(), 6);
        assert_eq!(build(CatalogName::Sl2(3)).unwrap().order(), 24);
        assert_eq!(build(CatalogName::Sl2(5)).unwrap().order(), 120);
    }

    #[test]
    fn specials() {
        let specials = special_elements();
        assert_eq!(specials.len(), 24);
        for s in &specials {
            assert_eq!(s.norm2(), ScalarQ::one());
        }
        // contains 2^{-1/2}(1 - i)
        let phi = (&Quat::one() - &Quat::i()).scale(&ScalarQ::inv_sqrt2());
        assert!(specials.contains(&phi));
        // disjoint from the Hurwitz units
        let hurwitz = hurwitz_units();
        assert!(specials.iter().all(|s| !hurwitz.contains(s)));
    }

    #[test]
    fn o2_closed_and_crosschecked() {
        let elems = binary_octahedral_elements();
        assert_eq!(elems.len(), 48);
        // exhaustive closure under multiplication
        for a in &elems {
            for b in &elems {
                assert!(elems.contains(&a.mul(b)));
            }
        }
        // {i, (1+i)/sqrt2} is NOT a generating set: (1+i)/sqrt2 squares to
        // i, so it closes to the cyclic group of order 8
        let s = Quat::from_ints(1, 1, 0, 0).scale(&ScalarQ::inv_sqrt2());
        let (c8, _) = FiniteGroup::from_closure("C8'", &[Quat::i(), s.clone()], DEFAULT_CLOSURE_CAP)
            .unwrap();
        assert_eq!(c8.order(), 8);
        // independent construction: closure from {(1+i+j+k)/2, (1+i)/sqrt2}
        let omega = Quat::from_ints(1, 1, 1, 1)
            .scale(&ScalarQ::new(Rat::new(1, 2).unwrap(), Rat::zero()));
        let (by_closure, mut closure_elems) =
            FiniteGroup::from_closure("2O'", &[omega, s], DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(by_closure.order(), 48);
        closure_elems.sort();
        let mut union = elems.clone();
        union.sort();
        assert_eq!(closure_elems, union);
    }

    #[test]
    fn v_labels_and_table() {
        let v = build(CatalogName::V).unwrap();
        let find = |l: &str| v.ids().find(|&g| v.label(g) == l).unwrap();
        let (i, j, k) = (find("I"), find("J"), find("K"));
        assert_eq!(v.mul(i, j), k);
        assert_eq!(v.mul(j, i), k);
        assert_eq!(v.mul(i, i), v.identity());
        assert_eq!(v.label(v.identity()), "1");
    }

    #[test]
    fn exercise_ii_c2c2_iso_v() {
        let c2 = build(CatalogName::Cyclic(2)).unwrap();
        let v = build(CatalogName::V).unwrap();
        let prod = crate::group::direct_product("C2xC2", &c2, &c2).unwrap();
        let g = prod.group;
        // (1,0) -> I, (0,1) -> J extends to an isomorphism
        let find_pair = |a: u16, b: u16| {
            g.elements()
                .find(|(_, e)| e.realization == Realization::Pair(a, b))
                .unwrap()
                .0
        };
        let vi = v.ids().find(|&x| v.label(x) == "I").unwrap();
        let vj = v.ids().find(|&x| v.label(x) == "J").unwrap();
        let hom = crate::group::GroupHom::from_generator_images(
            g.clone(),
            v.clone(),
            &[(find_pair(1, 0), vi), (find_pair(0, 1), vj)],
        )
        .unwrap();
        assert!(hom.is_bijective());
        // and the image of (1,1) is K
        let vk = v.ids().find(|&x| v.label(x) == "K").unwrap();
        assert_eq!(hom.apply(find_pair(1, 1)), vk);
    }

    #[test]
    fn hurwitz_units_contain_q_with_index_3() {
        let t2 = build(CatalogName::T2).unwrap();
        let q_ids: Vec<u16> = lipschitz_units()
            .iter()
            .map(|u| quat_id(&t2, u).unwrap())
            .collect();
        assert!(t2.is_normal(&q_ids).unwrap());
        assert_eq!(t2.order() / q_ids.len(), 3);
    }

    #[test]
    fn name_parsing() {
        assert_eq!("Q".parse::<CatalogName>().unwrap(), CatalogName::Q);
        assert_eq!("2T".parse::<CatalogName>().unwrap(), CatalogName::T2);
        assert_eq!("2.T".parse::<CatalogName>().unwrap(), CatalogName::T2);
        assert_eq!("sl2(3)".parse::<CatalogName>().unwrap(), CatalogName::Sl2(3));
        assert_eq!("C12".parse::<CatalogName>().unwrap(), CatalogName::Cyclic(12));
        assert!("S6".parse::<CatalogName>().is_err());
        assert!("SL2(7)".parse::<CatalogName>().is_err());
        assert!("banana".parse::<CatalogName>().is_err());
    }

    #[test]
    fn lattice_dot_v_has_5_nodes() {
        let v = build(CatalogName::V).unwrap();
        let dot = lattice_dot(&v).unwrap();
        let nodes = dot.lines().filter(|l| l.contains("[label=")).count();
        assert_eq!(nodes, 5);
    }

    #[test]
    fn sl2_iso_claims() {
        let s3 = build(CatalogName::Sym(3)).unwrap();
        assert!(isomorphic(&build(CatalogName::Sl2(2)).unwrap(), &s3).is_some());
        let t2 = build(CatalogName::T2).unwrap();
        assert!(isomorphic(&build(CatalogName::Sl2(3)).unwrap(), &t2).is_some());
    }
}
