use bigrass_core::bdet::{bdet_condense, det_laplace, lambda_q_det};
use bigrass_core::bpoly::{
    bn_determinant, bn_lambda_q, bn_product, bn_recursion, reading_polynomial,
};
use bigrass_core::poly::sign_specialization;
use bigrass_core::vandermonde::{tournament_sum, vandermonde_product};
use bigrass_core::{Deformation, PolyMatrix, Substitution};
use num_rational::BigRational;
use num_traits::One;

#[test]
fn lambda_q_product_specializes_to_b_n() {
    let minus_one = Substitution::new().lambda(-BigRational::one());
    for n in 1..=10 {
        let at = bn_lambda_q(n).unwrap().eval(&minus_one).unwrap();
        assert_eq!(at, bn_product(n).unwrap(), "n = {n}");
    }
}

#[test]
fn transitive_part_specializes_to_b_n() {
    for n in 1..=6 {
        let e = tournament_sum(n, true).unwrap();
        let at = e
            .transitive_part
            .eval(&sign_specialization(n as u32))
            .unwrap();
        assert_eq!(at, bn_product(n).unwrap(), "n = {n}");
    }
}

#[test]
fn products_equal_tournament_sums_at_six() {
    for weighted in [false, true] {
        let sum = tournament_sum(6, weighted).unwrap();
        assert_eq!(sum.transitive_count, 720);
        assert_eq!(sum.cyclic_count, 32768 - 720);
        assert_eq!(vandermonde_product(6, weighted).unwrap(), sum.total);
    }
}

#[test]
fn weighted_expansion_at_q_one_is_unweighted() {
    for n in 1..=5 {
        let w = tournament_sum(n, true).unwrap().total.at_q_one();
        assert_eq!(w, tournament_sum(n, false).unwrap().total, "n = {n}");
    }
}

#[test]
fn condensation_reaches_where_expansion_is_slow() {
    // Laplace on the deformation is exponential but still fine at 10.
    let ones = PolyMatrix::ones(10);
    assert_eq!(
        det_laplace(&ones.deform(Deformation::B)),
        bdet_condense(&ones).unwrap()
    );
    assert_eq!(bn_determinant(11).unwrap(), bn_recursion(11).unwrap());
}

#[test]
fn lambda_q_condensation_beyond_six() {
    for n in [7, 8] {
        let v = lambda_q_det(&PolyMatrix::ones(n))
            .unwrap()
            .to_polynomial()
            .unwrap();
        assert_eq!(v, bn_lambda_q(n).unwrap(), "n = {n}");
    }
}

#[test]
fn reading_polynomial_is_palindromic() {
    for n in 1..=10 {
        let p = reading_polynomial(n).unwrap();
        assert_eq!(
            p.q_reflect().mul_monomial(&bigrass_core::Monomial::q_pow(
                p.q_degree().unwrap().as_int().unwrap()
            )),
            p
        );
    }
}
