//! Searches over finite groups: generating sequences, subgroup
//! enumeration, isomorphism and automorphism search, and section search
//! for split sequences.
//!
//! All searches are exhaustive over a pruned candidate space, so a
//! negative answer is a proof by exhaustion: isomorphism candidates are
//! pruned by (element order, conjugacy class size) fingerprints, which
//! every isomorphism preserves, and section candidates by the fiber and
//! order-divisibility constraints every section satisfies.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::group::{relabel_automorphisms, AutElem, FiniteGroup, GroupHom, SEARCH_BOUND};

impl FiniteGroup {
    /// A shortest sequence of elements whose closure is the whole group,
    /// lexicographically first among those of minimal length.
    pub fn minimal_generating_sequence(&self) -> Vec<u16> {
        let n = self.order();
        if n == 1 {
            return vec![self.identity()];
        }
        for len in 1..=n {
            let mut tuple: Vec<u16> = Vec::with_capacity(len);
            if let Some(found) = self.mgs_backtrack(&mut tuple, len) {
                return found;
            }
        }
        unreachable!("the full element list always generates");
    }

    fn mgs_backtrack(&self, tuple: &mut Vec<u16>, len: usize) -> Option<Vec<u16>> {
        if tuple.len() == len {
            let closure = self.subset_closure(tuple);
            if closure.len() == self.order() {
                return Some(tuple.clone());
            }
            return None;
        }
        for g in self.ids() {
            // a minimal sequence never contains a redundant element
            if !tuple.is_empty() && self.subset_closure(tuple).contains(&g) {
                continue;
            }
            if tuple.is_empty() && g == self.identity() && len > 1 {
                continue;
            }
            tuple.push(g);
            if let Some(found) = self.mgs_backtrack(tuple, len) {
                return Some(found);
            }
            tuple.pop();
        }
        None
    }

    /// All subgroups, by incremental closure with canonical-set
    /// deduplication. Guarded by the search bound.
    pub fn subgroups(&self) -> Result<Vec<Vec<u16>>> {
        if self.order() > SEARCH_BOUND {
            return Err(Error::SearchBoundExceeded {
                order: self.order(),
                bound: SEARCH_BOUND,
            });
        }
        let trivial = vec![self.identity()];
        let mut known: BTreeSet<Vec<u16>> = BTreeSet::new();
        known.insert(trivial.clone());
        let mut queue = vec![trivial];
        while let Some(sub) = queue.pop() {
            for g in self.ids() {
                if sub.binary_search(&g).is_ok() {
                    continue;
                }
                let mut seed = sub.clone();
                seed.push(g);
                let bigger = self.subset_closure(&seed);
                if known.insert(bigger.clone()) {
                    queue.push(bigger);
                }
            }
        }
        let mut subs: Vec<Vec<u16>> = known.into_iter().collect();
        subs.sort_by_key(|s| (s.len(), s.clone()));
        Ok(subs)
    }

    /// The full automorphism group, materialized with its own Cayley
    /// table; elements are labeled by their images on a minimal
    /// generating sequence.
    pub fn automorphism_group(&self) -> Result<FiniteGroup> {
        if self.order() > SEARCH_BOUND {
            return Err(Error::SearchBoundExceeded {
                order: self.order(),
                bound: SEARCH_BOUND,
            });
        }
        let maps = all_isomorphism_maps(self, self);
        let auts: Vec<AutElem> = maps.into_iter().map(AutElem).collect();
        let (group, ordered) =
            FiniteGroup::from_concrete_set(format!("Aut({})", self.name()), auts)?;
        Ok(relabel_automorphisms(group, &ordered, self))
    }
}

/// Every bijective homomorphism g -> h as an image vector, found by
/// backtracking over generator images pruned by fingerprints.
fn all_isomorphism_maps(g: &FiniteGroup, h: &FiniteGroup) -> Vec<Vec<u16>> {
    if g.order() != h.order() {
        return Vec::new();
    }
    let mut g_profile = g.order_profile();
    let mut h_profile = h.order_profile();
    g_profile.sort();
    h_profile.sort();
    if g_profile != h_profile {
        return Vec::new();
    }
    let gens = g.minimal_generating_sequence();
    let g_fp = g.fingerprints();
    let h_fp = h.fingerprints();
    let candidates: Vec<Vec<u16>> = gens
        .iter()
        .map(|&gen| {
            h.ids()
                .filter(|&cand| h_fp[cand as usize] == g_fp[gen as usize])
                .collect()
        })
        .collect();
    let mut found = Vec::new();
    let mut images = vec![0u16; gens.len()];
    search_images(g, h, &gens, &candidates, 0, &mut images, &mut found, false);
    found
}

#[allow(clippy::too_many_arguments)]
fn search_images(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[u16],
    candidates: &[Vec<u16>],
    depth: usize,
    images: &mut Vec<u16>,
    found: &mut Vec<Vec<u16>>,
    stop_at_first: bool,
) {
    if depth == gens.len() {
        let pairs: Vec<(u16, u16)> = gens.iter().copied().zip(images.iter().copied()).collect();
        if let Ok(hom) = GroupHom::from_generator_images(g.clone(), h.clone(), &pairs) {
            if hom.is_bijective() {
                found.push(hom.map().to_vec());
            }
        }
        return;
    }
    for &cand in &candidates[depth] {
        images[depth] = cand;
        search_images(g, h, gens, candidates, depth + 1, images, found, stop_at_first);
        if stop_at_first && !found.is_empty() {
            return;
        }
    }
}

/// A verified isomorphism witness g -> h, or None as a proof by
/// exhaustion over the pruned (complete) candidate space.
pub fn isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Option<GroupHom> {
    if g.order() != h.order() {
        return None;
    }
    let mut g_profile = g.order_profile();
    let mut h_profile = h.order_profile();
    g_profile.sort();
    h_profile.sort();
    if g_profile != h_profile {
        return None;
    }
    let gens = g.minimal_generating_sequence();
    let g_fp = g.fingerprints();
    let h_fp = h.fingerprints();
    let candidates: Vec<Vec<u16>> = gens
        .iter()
        .map(|&gen| {
            h.ids()
                .filter(|&cand| h_fp[cand as usize] == g_fp[gen as usize])
                .collect()
        })
        .collect();
    let mut found = Vec::new();
    let mut images = vec![0u16; gens.len()];
    search_images(g, h, &gens, &candidates, 0, &mut images, &mut found, true);
    let map = found.into_iter().next()?;
    Some(GroupHom::new(g.clone(), h.clone(), map).expect("search already validated the witness"))
}

/// Searches for a homomorphic section rho : K -> G of a surjection
/// psi : G -> K (so psi . rho = id_K). Returns None as a proof by
/// exhaustion: any section is determined by its images on a generating
/// sequence of K, each image lying in the psi-fiber of its generator
/// with compatible element order, and all such assignments are tried.
pub fn find_section(psi: &GroupHom) -> Result<Option<GroupHom>> {
    if !psi.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let g = psi.source().clone();
    let k = psi.target().clone();
    let gens = k.minimal_generating_sequence();
    let candidates: Vec<Vec<u16>> = gens
        .iter()
        .map(|&gen| {
            let ord = k.element_order(gen);
            g.ids()
                .filter(|&cand| psi.apply(cand) == gen && ord % g.element_order(cand) == 0)
                .collect()
        })
        .collect();
    let mut images = vec![0u16; gens.len()];
    let found = section_backtrack(&g, &k, psi, &gens, &candidates, 0, &mut images);
    Ok(found)
}

fn section_backtrack(
    g: &FiniteGroup,
    k: &FiniteGroup,
    psi: &GroupHom,
    gens: &[u16],
    candidates: &[Vec<u16>],
    depth: usize,
    images: &mut Vec<u16>,
) -> Option<GroupHom> {
    if depth == gens.len() {
        let pairs: Vec<(u16, u16)> = gens.iter().copied().zip(images.iter().copied()).collect();
        if let Ok(rho) = GroupHom::from_generator_images(k.clone(), g.clone(), &pairs) {
            let comp = rho.then(psi).expect("composable by construction");
            if comp.is_identity_map() {
                return Some(rho);
            }
        }
        return None;
    }
    for &cand in &candidates[depth] {
        images[depth] = cand;
        if let Some(rho) = section_backtrack(g, k, psi, gens, candidates, depth + 1, images) {
            return Some(rho);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, CatalogName};
    use crate::quat::Quat;

    #[test]
    fn mgs_examples() {
        let q = catalog::build(CatalogName::Q).unwrap();
        assert_eq!(q.minimal_generating_sequence().len(), 2);
        let c5 = catalog::build(CatalogName::Cyclic(5)).unwrap();
        assert_eq!(c5.minimal_generating_sequence().len(), 1);
        let v = catalog::build(CatalogName::V).unwrap();
        assert_eq!(v.minimal_generating_sequence().len(), 2);
    }

    #[test]
    fn subgroup_counts() {
        let q = catalog::build(CatalogName::Q).unwrap();
        assert_eq!(q.subgroups().unwrap().len(), 6);
        let v = catalog::build(CatalogName::V).unwrap();
        assert_eq!(v.subgroups().unwrap().len(), 5);
        let c1 = catalog::build(CatalogName::Cyclic(1)).unwrap();
        assert_eq!(c1.subgroups().unwrap().len(), 1);
    }

    #[test]
    fn automorphism_groups() {
        let q = catalog::build(CatalogName::Q).unwrap();
        let aut_q = q.automorphism_group().unwrap();
        assert_eq!(aut_q.order(), 24);
        let s4 = catalog::build(CatalogName::Sym(4)).unwrap();
        assert!(isomorphic(&aut_q, &s4).is_some());

        let v = catalog::build(CatalogName::V).unwrap();
        let aut_v = v.automorphism_group().unwrap();
        assert_eq!(aut_v.order(), 6);
        let s3 = catalog::build(CatalogName::Sym(3)).unwrap();
        assert!(isomorphic(&aut_v, &s3).is_some());
    }

    #[test]
    fn aut_contains_inner_as_normal_subgroup() {
        for name in [CatalogName::Q, CatalogName::V, CatalogName::Sym(3)] {
            let g = catalog::build(name).unwrap();
            let aut = g.automorphism_group().unwrap();
            let (inn, _) = g.inner_automorphism_group().unwrap();
            let inner_ids: Vec<u16> = inn
                .elements()
                .map(|(_, e)| {
                    aut.elements()
                        .find(|(_, a)| a.realization == e.realization)
                        .expect("inner automorphism missing from Aut")
                        .0
                })
                .collect();
            assert!(aut.is_normal(&inner_ids).unwrap());
        }
    }

    #[test]
    fn isomorphic_examples() {
        let c4 = catalog::build(CatalogName::Cyclic(4)).unwrap();
        let v = catalog::build(CatalogName::V).unwrap();
        assert!(isomorphic(&c4, &v).is_none());

        let sl2f2 = catalog::build(CatalogName::Sl2(2)).unwrap();
        let s3 = catalog::build(CatalogName::Sym(3)).unwrap();
        let w = isomorphic(&sl2f2, &s3).unwrap();
        assert!(w.is_bijective());
    }

    #[test]
    fn isomorphism_witness_is_symmetric() {
        let sl2f3 = catalog::build(CatalogName::Sl2(3)).unwrap();
        let t2 = catalog::build(CatalogName::T2).unwrap();
        let w = isomorphic(&sl2f3, &t2).unwrap();
        let back = w.inverted().unwrap();
        assert!(back.is_bijective());
        assert!(w.then(&back).unwrap().is_identity_map());
    }

    #[test]
    fn section_exists_for_sign_map() {
        let s3 = catalog::build(CatalogName::Sym(3)).unwrap();
        let c2 = catalog::build(CatalogName::Cyclic(2)).unwrap();
        let t12 = s3.ids().find(|&g| s3.label(g) == "(1 2)").unwrap();
        let t23 = s3.ids().find(|&g| s3.label(g) == "(2 3)").unwrap();
        let sign =
            GroupHom::from_generator_images(s3.clone(), c2.clone(), &[(t12, 1), (t23, 1)]).unwrap();
        let rho = find_section(&sign).unwrap().expect("section must exist");
        assert!(rho.then(&sign).unwrap().is_identity_map());
    }

    #[test]
    fn no_section_for_q_onto_v() {
        let q = catalog::build(CatalogName::Q).unwrap();
        let (_, proj) = q.inner_automorphism_group().unwrap();
        assert!(find_section(&proj).unwrap().is_none());
        // independent oracle: enumerate every function on a generating
        // pair of V without any pruning and extend
        let v = proj.target().clone();
        let gens = v.minimal_generating_sequence();
        assert_eq!(gens.len(), 2);
        let mut sections = 0;
        for img0 in q.ids() {
            for img1 in q.ids() {
                let pairs = [(gens[0], img0), (gens[1], img1)];
                if let Ok(rho) = GroupHom::from_generator_images(v.clone(), q.clone(), &pairs) {
                    if rho.then(&proj).unwrap().is_identity_map() {
                        sections += 1;
                    }
                }
            }
        }
        assert_eq!(sections, 0);
    }

    #[test]
    fn no_section_for_2o_onto_s3() {
        let o2 = catalog::build(CatalogName::O2).unwrap();
        let q_ids: Vec<u16> = catalog::lipschitz_units()
            .iter()
            .map(|u| catalog::quat_id(&o2, u).unwrap())
            .collect();
        let (quot, proj) = o2.quotient(&q_ids).unwrap();
        let s3 = catalog::build(CatalogName::Sym(3)).unwrap();
        let w = isomorphic(&quot, &s3).unwrap();
        let psi = proj.then(&w).unwrap();
        assert!(find_section(&psi).unwrap().is_none());
        // the only involution of 2O is central (-1), which the projection
        // kills, so no transposition can lift
        let minus_one = catalog::quat_id(&o2, &(-&Quat::one())).unwrap();
        let involutions: Vec<u16> = o2.ids().filter(|&g| o2.element_order(g) == 2).collect();
        assert_eq!(involutions, vec![minus_one]);
    }
}
