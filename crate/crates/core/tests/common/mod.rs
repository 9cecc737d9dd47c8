#![allow(dead_code)]

use gca_core::{Monomial, Poly, Scalar, Spec, Tensor, Vector};

pub fn q(n: i64) -> Scalar {
    Scalar::from(n)
}

pub fn c(s: &str) -> Scalar {
    s.parse().unwrap()
}

pub fn konst(n: i64) -> Poly {
    Poly::constant(q(n))
}

pub fn t1(l: i64, eta: i64, s: i64) -> Spec {
    Spec::type_one(q(l), q(eta), konst(s)).unwrap()
}

pub fn t2(l: i64, eta: i64, s: i64) -> Spec {
    Spec::type_two(q(l), q(eta), konst(s)).unwrap()
}

pub fn tensor(a: Spec, b: Spec) -> Tensor {
    Tensor::new(a, b).unwrap()
}

pub fn mono(e: [u32; 4]) -> Vector {
    Vector::monomial(Monomial::new(&e).unwrap())
}

pub fn v4(terms: &[([u32; 4], i64)]) -> Vector {
    Vector::from_terms(4, terms.iter().map(|(e, k)| (Monomial::new(e).unwrap(), q(*k)))).unwrap()
}
