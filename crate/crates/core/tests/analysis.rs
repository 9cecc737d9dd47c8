mod common;

use common::*;
use gca_core::analysis::*;
use gca_core::{Monomial, Poly, Spec, Vector};
use std::time::Instant;

#[test]
fn intertwiner_identity_has_one_dimension() {
    let a = tensor(t1(2, 0, 1), t2(3, 0, 1));
    let t = Instant::now();
    let sol = intertwiner_solve(&a, &a, 2, 3).unwrap();
    eprintln!("identity: {:?} eq={} in {:?}", sol.dim, sol.equations, t.elapsed());
    assert_eq!(sol.dim, 1);
    let sample = sol.sample.unwrap();
    let (m0, v0) = &sample[0];
    let scale = v0.coeff(m0).unwrap().clone();
    for (m, v) in &sample {
        assert_eq!(*v, Vector::monomial(*m).scale(&scale));
    }
}

#[test]
fn intertwiner_eta_mismatch_is_empty() {
    let a = tensor(t1(2, 0, 1), t2(3, 0, 1));
    let b = tensor(t1(2, 1, 1), t2(3, 0, 1));
    assert_eq!(intertwiner_solve(&a, &b, 2, 3).unwrap().dim, 0);
}

#[test]
fn intertwiner_swap() {
    let a = tensor(t1(2, 0, 3), t1(5, 1, 7));
    let b = tensor(t1(5, 1, 7), t1(2, 0, 3));
    let sol = intertwiner_solve(&a, &b, 2, 3).unwrap();
    assert_eq!(sol.dim, 1);
    let rev = intertwiner_solve(&b, &a, 2, 3).unwrap();
    assert_eq!(rev.dim, 1);
}

#[test]
fn tensor_probe_examples() {
    let t = Instant::now();
    let p = probe_tensor_irreducible(&tensor(t1(2, 0, 1), t2(3, 0, 1)), 4, 3).unwrap();
    eprintln!("probe irr in {:?}", t.elapsed());
    assert!(p.is_irreducible_evidence(), "{p:?}");
    let p = probe_tensor_irreducible(&tensor(t1(2, 0, 1), t2(2, 0, 1)), 4, 3).unwrap();
    assert!(matches!(p, Probe::ReducibleWitness { kind: Some(SubmoduleKind::V12), .. }));
    let p = probe_tensor_irreducible(&tensor(t1(2, 0, 1), t1(2, 1, 3)), 4, 3).unwrap();
    assert!(matches!(p, Probe::ReducibleWitness { kind: Some(SubmoduleKind::W11), .. }));
}

#[test]
fn rank_one_examples() {
    let p = probe_rank_one(&t1(2, 0, 5), 4, 6).unwrap();
    assert!(p.is_irreducible_evidence());
    let x = Spec::type_one(q(2), q(0), Poly::var()).unwrap();
    assert!(matches!(probe_rank_one(&x, 4, 6).unwrap(), Probe::ReducibleWitness { .. }));
    let p3 = Spec::type_three(q(2), Poly::var()).unwrap();
    assert!(matches!(probe_rank_one(&p3, 4, 6).unwrap(), Probe::ReducibleWitness { .. }));
}

#[test]
fn classify_examples() {
    let a = tensor(t1(2, 0, 1), t2(3, 0, 1));
    let v = classify_iso(&a, &a).unwrap();
    assert!(v.equivalent);
    assert_eq!(v.matching, Matching::Ordered);
    let b = tensor(t1(2, 0, 3), t1(5, 1, 7));
    let v = classify_iso(&b, &b.swapped()).unwrap();
    assert_eq!(v.matching, Matching::Swapped);
    let c2 = tensor(t1(2, 0, 1), t2(3, 0, 2));
    let v = classify_iso(&a, &c2).unwrap();
    assert!(!v.equivalent);
    assert_eq!(v.witness_dim, 0);
    let bad = tensor(t1(2, 0, 1), t2(2, 0, 1));
    assert!(matches!(classify_iso(&a, &bad), Err(gca_core::Error::HypothesisViolation(_))));
}

#[test]
fn invariance_examples() {
    let ts = tensor(t1(2, 1, 1), t2(2, -1, 3));
    let span = submodule_span(SubmoduleKind::V12, 5);
    assert!(check_invariance(&ts, &span, 3, 5).unwrap().invariant);
    let r = check_invariance(&ts, &[mono([0, 1, 0, 0])], 3, 5).unwrap();
    assert!(!r.invariant);
    let w = Spec::witt(q(1), c("1/2")).unwrap();
    let w2 = Spec::witt(q(1), c("1/3")).unwrap();
    let ts = tensor(w, w2);
    let span = submodule_span(SubmoduleKind::U5, 5);
    let r = check_invariance(&ts, &span, 3, 5).unwrap();
    assert!(r.invariant);
    assert!(!r.basis.member(&mono([0, 1, 0, 0])).unwrap());
    let _ = Monomial::one(4);
}

mod randomized {
    use super::common::*;
    use gca_core::analysis::*;
    use gca_core::closure::generate;
    use gca_core::freemod::Module;
    use gca_core::tensor::deg;
    use gca_core::{DegTuple, Field, GenRef, Monomial, Poly, Scalar, Spec, Tensor, Vector};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn small(rng: &mut impl Rng) -> Scalar {
        Scalar::from_fracs(rng.gen_range(-6..=6), rng.gen_range(1..=3), rng.gen_range(-2..=2), 1)
    }

    fn nonzero(rng: &mut impl Rng) -> Scalar {
        loop {
            let z = small(rng);
            if z != q(0) {
                return z;
            }
        }
    }

    fn type_one_pair(rng: &mut impl Rng) -> Tensor {
        let l1 = nonzero(rng);
        let l2 = loop {
            let l = nonzero(rng);
            if l != l1 {
                break l;
            }
        };
        let a = Spec::type_one(l1, small(rng), Poly::constant(nonzero(rng))).unwrap();
        let b = Spec::type_one(l2, small(rng), Poly::constant(nonzero(rng))).unwrap();
        tensor(a, b)
    }

    fn lead_for_case(case: u8, rng: &mut impl Rng) -> [u32; 4] {
        let w = rng.gen_range(1..=3u32);
        match case {
            1 => {
                let p = rng.gen_range(1..=w);
                let rest = w - p;
                let q = rng.gen_range(0..=rest);
                let s = rng.gen_range(0..=rest - q);
                [p, q, s, rest - q - s]
            }
            2 => {
                let q = rng.gen_range(1..=w);
                let s = rng.gen_range(0..=w - q);
                [0, q, s, w - q - s]
            }
            3 => {
                let s = rng.gen_range(1..=w);
                [0, 0, s, w - s]
            }
            _ => [0, 0, 0, w],
        }
    }

    fn vector_with_lead(lead: [u32; 4], rng: &mut impl Rng) -> Vector {
        let top = DegTuple(lead);
        let mut v = Vector::term(Monomial::new(&lead).unwrap(), nonzero(rng));
        for m in Monomial::all_up_to(4, top.weight()) {
            if DegTuple::of(&m) < top && rng.gen_bool(0.3) {
                v.add_term(m, small(rng));
            }
        }
        v
    }

    #[test]
    fn reduction_cases_hit_their_targets() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for case in 1..=4u8 {
            for _ in 0..25 {
                let ts = type_one_pair(&mut rng);
                let lead = lead_for_case(case, &mut rng);
                let v = vector_with_lead(lead, &mut rng);
                assert_eq!(deg(&v).unwrap(), DegTuple(lead));
                let step = reduce_degree(&ts, &v).unwrap();
                let [p, q_, s, t] = lead;
                let target = match case {
                    1 => [p - 1, q_, s, t],
                    2 => [0, q_ - 1, s, t],
                    3 => [0, 0, s - 1, t],
                    _ => [0, 0, 0, t - 1],
                };
                assert_eq!(step.case_id, case);
                assert_eq!(step.after_deg, DegTuple(target));
                assert!(step.after_deg < step.before_deg);
                let max_m = [0, 1, 2, 3][case as usize - 1];
                assert!((0..=max_m).contains(&step.m));
                // result recomputed from the action directly
                let (s1, s2) = (ts.left.constant_sigma().unwrap(), ts.right.constant_sigma().unwrap());
                let c = ts.left.lambda().pow_i(step.m).unwrap() * s1 + &(ts.right.lambda().pow_i(step.m).unwrap() * s2);
                let mut want = ts.act(GenRef::i(step.m), &v).unwrap();
                want.add_scaled(&-c, &v);
                assert_eq!(step.result, want);

                let steps = reduce_fully(&ts, &v).unwrap();
                assert!(steps.len() <= DegTuple(lead).weight() as usize);
                assert!(steps.last().unwrap().after_deg.is_zero());
            }
        }
    }

    fn leibniz_det(m: &[Vec<Scalar>]) -> Scalar {
        let n = m.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = q(0);
        // Heap's algorithm, tracking parity
        fn visit(k: usize, perm: &mut Vec<usize>, sign: &mut i64, m: &[Vec<Scalar>], total: &mut Scalar) {
            if k == 1 {
                let mut t = Scalar::from(*sign);
                for (r, &c) in perm.iter().enumerate() {
                    t = t * &m[r][c];
                }
                *total += &t;
                return;
            }
            for i in 0..k {
                visit(k - 1, perm, sign, m, total);
                if i < k - 1 {
                    let j = if k.is_multiple_of(2) { i } else { 0 };
                    perm.swap(j, k - 1);
                    *sign = -*sign;
                }
            }
        }
        let mut sign = 1;
        visit(n, &mut perm, &mut sign, m, &mut total);
        total
    }

    #[test]
    fn vandermonde_matches_leibniz() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let pool: Vec<Scalar> = (0..6).map(|_| nonzero(&mut rng)).collect();
        for _ in 0..200 {
            // draw from a small pool so coincidences actually happen
            let v: Vec<Scalar> = (0..4).map(|_| pool.choose(&mut rng).unwrap().clone()).collect();
            let o = vandermonde_obstruction(&v[0], &v[1], &v[2], &v[3]).unwrap();
            let m: Vec<Vec<Scalar>> = (0..4)
                .map(|k| {
                    (0..4)
                        .map(|c| {
                            let sign = if c % 2 == 0 { q(1) } else { q(-1) };
                            sign * &v[c].pow_i(k).unwrap()
                        })
                        .collect()
                })
                .collect();
            assert_eq!(o.det, leibniz_det(&m));
            let coincide = (0..4).any(|i| (i + 1..4).any(|j| v[i] == v[j]));
            assert_eq!(o.factored_zero, coincide);
            assert_eq!(o.det == q(0), o.factored_zero);
        }
    }

    #[test]
    fn intertwiner_dimension_is_symmetric() {
        let pairs = [
            (tensor(t1(2, 0, 1), t2(3, 0, 1)), tensor(t1(2, 0, 1), t2(3, 0, 1))),
            (tensor(t1(2, 0, 1), t2(3, 0, 1)), tensor(t1(2, 0, 2), t2(3, 0, 1))),
            (tensor(t1(2, 0, 3), t1(5, 1, 7)), tensor(t1(5, 1, 7), t1(2, 0, 3))),
            (tensor(t2(2, 0, 3), t2(5, 1, 7)), tensor(t2(2, 0, 3), t2(4, 1, 7))),
        ];
        for (a, b) in pairs {
            let ab = intertwiner_solve(&a, &b, 2, 3).unwrap().dim;
            let ba = intertwiner_solve(&b, &a, 2, 3).unwrap().dim;
            assert_eq!(ab, ba);
        }
    }

    #[test]
    fn probes_follow_the_lambda_condition() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for k in 0..20 {
            let lam = nonzero(&mut rng);
            let shifted = if lam == q(-1) { lam.clone() + &q(2) } else { lam.clone() + &q(1) };
            let other = if k % 2 == 0 { lam.clone() } else { shifted };
            let (l, r) = match k % 3 {
                0 => (
                    Spec::type_one(lam, small(&mut rng), Poly::constant(nonzero(&mut rng))),
                    Spec::type_two(other, small(&mut rng), Poly::constant(nonzero(&mut rng))),
                ),
                1 => (
                    Spec::type_one(lam, small(&mut rng), Poly::constant(nonzero(&mut rng))),
                    Spec::type_one(other, small(&mut rng), Poly::constant(nonzero(&mut rng))),
                ),
                _ => (
                    Spec::type_two(lam, small(&mut rng), Poly::constant(nonzero(&mut rng))),
                    Spec::type_two(other, small(&mut rng), Poly::constant(nonzero(&mut rng))),
                ),
            };
            let ts = tensor(l.unwrap(), r.unwrap());
            let equal = ts.left.lambda() == ts.right.lambda();
            let p = probe_tensor_irreducible(&ts, 3, 2).unwrap();
            assert_eq!(p.is_irreducible_evidence(), !equal, "{ts:?}");
        }
    }

    #[test]
    fn v12_is_invariant_and_generated_by_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let span = submodule_span(SubmoduleKind::V12, 5);
        for _ in 0..5 {
            let lam = nonzero(&mut rng);
            let ts = tensor(
                Spec::type_one(lam.clone(), small(&mut rng), Poly::constant(nonzero(&mut rng))).unwrap(),
                Spec::type_two(lam, small(&mut rng), Poly::constant(nonzero(&mut rng))).unwrap(),
            );
            let inv = check_invariance(&ts, &span, 3, 5).unwrap();
            assert!(inv.invariant);
            assert!(!inv.basis.member(&mono([0, 1, 0, 0])).unwrap());
        }
        let ts = tensor(t1(2, 0, 1), t2(2, 0, 1));
        let closure = generate(&ts, &[Vector::one(4)], 3, 5).unwrap();
        let v =
            gca_core::closure::EchelonBasis::from_vectors(4, &submodule_span::<Scalar>(SubmoduleKind::V12, 5)).unwrap();
        assert_eq!(&closure.basis.dims_by_weight()[..5], &v.dims_by_weight()[..5]);
    }

    #[test]
    fn one_variable_submodule_for_hvir() {
        let ts = tensor(Spec::hvir(q(3), c("1/2"), q(2)).unwrap(), Spec::hvir(q(3), q(1), c("-1/5")).unwrap());
        let span = submodule_span(SubmoduleKind::U5, 5);
        let r = check_invariance(&ts, &span, 3, 5).unwrap();
        assert!(r.invariant);
        assert!(!r.basis.member(&mono([0, 1, 0, 0])).unwrap());
    }
}
