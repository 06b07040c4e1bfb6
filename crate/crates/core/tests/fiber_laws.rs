//! Empirical laws of the coloring-monomial correspondence: totality,
//! surjectivity, the size of each preimage, agreement of the two membership
//! routes, and the fact that colorings sharing a monomial always share a
//! Kempe class.

use std::collections::BTreeMap;

use stabring::coloring::{enumerate_colorings, kempe_classes};
use stabring::toric::{
    binomial_in_ideal, coloring_to_monomial, enumerate_fiber, stable_sets, Binomial, Monomial,
    StableFamily,
};
use stabring::{replication, Graph};

fn cases() -> Vec<(Graph, Vec<usize>, usize)> {
    let k2 = Graph::complete(2).unwrap();
    let p3 = Graph::from_edges(3, &[(1, 2), (2, 3)]).unwrap();
    let k3 = Graph::complete(3).unwrap();
    let paw = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 1), (1, 4)]).unwrap();
    let prism =
        Graph::from_edges(6, &[(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4), (1, 4), (2, 5), (3, 6)])
            .unwrap();
    vec![
        (k2.clone(), vec![1, 1], 2),
        (k2.clone(), vec![2, 1], 3),
        (k2, vec![2, 2], 3),
        (p3.clone(), vec![1, 1, 1], 2),
        (p3.clone(), vec![2, 1, 2], 3),
        (p3, vec![2, 2, 1], 3),
        (k3.clone(), vec![1, 1, 1], 3),
        (k3, vec![2, 1, 1], 3),
        (paw.clone(), vec![1, 1, 1, 1], 3),
        (paw, vec![1, 1, 1, 2], 3),
        (prism, vec![1, 1, 1, 1, 1, 1], 3),
    ]
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Color permutations times per-vertex copy permutations, divided by the
/// symmetry of repeated factors.
fn expected_preimages(m: &Monomial, a: &[usize]) -> usize {
    let mut mult: BTreeMap<u16, usize> = BTreeMap::new();
    for &f in m.factors() {
        *mult.entry(f).or_insert(0) += 1;
    }
    let copies: usize = a.iter().map(|&ap| factorial(ap)).product();
    factorial(m.degree()) / mult.values().map(|&c| factorial(c)).product::<usize>() * copies
}

#[test]
fn correspondence_is_total_surjective_and_orbit_sized() {
    for (g, a, k) in cases() {
        let fam = stable_sets(&g);
        let rep = replication(&g, &a).unwrap();
        let fiber = enumerate_fiber(&fam, &a, k).unwrap();
        let mut counts: BTreeMap<Vec<u16>, usize> = BTreeMap::new();
        for f in enumerate_colorings(&rep.graph, k) {
            let m = coloring_to_monomial(&fam, &rep, &f).unwrap();
            assert_eq!(m.multidegree(&fam), a, "multidegree preserved");
            assert_eq!(m.degree(), k);
            assert!(
                fiber.binary_search(&m).is_ok(),
                "image lies in the enumerated fiber"
            );
            *counts.entry(m.factors().to_vec()).or_insert(0) += 1;
        }
        assert_eq!(counts.len(), fiber.len(), "every fiber element is hit");
        for m in &fiber {
            let got = counts[&m.factors().to_vec()];
            assert_eq!(
                got,
                expected_preimages(m, &a),
                "preimage count for {} over {:?}",
                m.render(&fam),
                a
            );
        }
    }
}

#[test]
fn colorings_with_equal_monomials_share_a_kempe_class() {
    for (g, a, k) in cases() {
        let fam = stable_sets(&g);
        let rep = replication(&g, &a).unwrap();
        let part = kempe_classes(&rep.graph, k);
        let mut class_by_monomial: BTreeMap<Vec<u16>, u32> = BTreeMap::new();
        for (idx, f) in part.colorings.iter().enumerate() {
            let m = coloring_to_monomial(&fam, &rep, f).unwrap();
            let class = part.class_of[idx];
            match class_by_monomial.get(m.factors()) {
                None => {
                    class_by_monomial.insert(m.factors().to_vec(), class);
                }
                Some(&seen) => assert_eq!(
                    seen,
                    class,
                    "colorings of {} split across Kempe classes",
                    m.render(&fam)
                ),
            }
        }
    }
}

fn all_monomials(fam: &StableFamily, k: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut chunk: Vec<u16> = Vec::with_capacity(k);
    fn rec(fam: &StableFamily, k: usize, max: u16, chunk: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if chunk.len() == k {
            out.push(Monomial::new(fam, chunk.clone()).unwrap());
            return;
        }
        for f in 0..=max {
            chunk.push(f);
            rec(fam, k, f, chunk, out);
            chunk.pop();
        }
    }
    rec(fam, k, (fam.len() - 1) as u16, &mut chunk, &mut out);
    out
}

#[test]
fn membership_agrees_with_fiber_search() {
    let p3 = Graph::from_edges(3, &[(1, 2), (2, 3)]).unwrap();
    let c4 = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
    for g in [p3, c4] {
        let fam = stable_sets(&g);
        for k in 2..=3 {
            let monomials = all_monomials(&fam, k);
            for u in &monomials {
                let fiber = enumerate_fiber(&fam, &u.multidegree(&fam), k).unwrap();
                for v in &monomials {
                    let member = binomial_in_ideal(
                        &fam,
                        &Binomial::new(u.clone(), v.clone()).unwrap(),
                    );
                    let same_fiber = fiber.binary_search(v).is_ok();
                    assert_eq!(member, same_fiber);
                }
            }
        }
    }
}
