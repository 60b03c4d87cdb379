mod common;

use grasschar_core::bitmatrix::matrix_kernel_basis;
use grasschar_core::grassmann::{
    borel_ring, fukaya_family, g_poly, gysin_dims, image_ring, kernel_intersection, mult_w1,
    multiplication_map, oriented_ring, oriented_ring_k2, pow2, restriction_map, wbar, Case,
    GrassmannParams, RestrictionKind, RingKey,
};
use grasschar_core::groebner::ideal_member;
use grasschar_core::text::parse_poly;
use grasschar_core::{BitMatrix, Error, GradedQuotient, Monomial, PolyGF2};

fn sealed(mut q: GradedQuotient, to: u32) -> GradedQuotient {
    q.seal_to(to).unwrap();
    q
}

fn params(t: u32, case: Case, gamma: bool) -> GrassmannParams {
    GrassmannParams::new(t, case, gamma).unwrap()
}

#[test]
fn wbar_examples() {
    for k in 1..=3 {
        assert!(wbar(0, k).unwrap().is_one());
    }
    assert_eq!(wbar(2, 3).unwrap().to_string(), "w1^2 + w2");
    for t in [3, 4] {
        let w = wbar(pow2(t) - 3, 3).unwrap();
        assert!(w.coeff_of(&Monomial::new(&[(pow2(t) - 3) as u16, 0, 0])));
    }
    assert!(matches!(wbar(3, 4), Err(Error::InvalidParams(_))));
    assert!(matches!(wbar(3, 0), Err(Error::InvalidParams(_))));
}

#[test]
fn g_examples() {
    assert!(g_poly(0).is_one());
    assert!(g_poly(1).is_zero());
    assert!(g_poly(5).is_zero());
    assert_eq!(g_poly(6).to_string(), "w2^3 + w3^2");
    assert_eq!(g_poly(7).to_string(), "w2^2*w3");
}

#[test]
fn fukaya_examples() {
    let f3: Vec<String> = fukaya_family(3)
        .unwrap()
        .iter()
        .map(|f| f.to_string())
        .collect();
    assert_eq!(f3, ["w2^3 + w3^2", "w2^2*w3", "w3^3"]);
    for t in 3..=8 {
        let f = fukaya_family(t).unwrap();
        let lm0 = f[0].leading_monomial().unwrap();
        assert_eq!(lm0.exponents(), [(pow2(t - 1) - 1) as u16, 0]);
    }
    assert_eq!(fukaya_family(4).unwrap()[3].to_string(), "w3^7");
    assert_eq!(fukaya_family(2), Err(Error::UnsupportedT(2)));
    assert_eq!(fukaya_family(9), Err(Error::UnsupportedT(9)));
}

#[test]
fn borel_examples() {
    let mut g73 = borel_ring(7, 3).unwrap();
    assert_eq!(g73.hilbert_function(14).unwrap().iter().sum::<usize>(), 35);
    for n in 1..8 {
        let mut rp = borel_ring(n, 1).unwrap();
        let h = rp.hilbert_function(n + 2).unwrap();
        let expected: Vec<usize> = (0..=n + 2).map(|d| usize::from(d < n)).collect();
        assert_eq!(h, expected);
    }
    // partitions of 4 in a 2 x 4 box: (4), (3,1), (2,2)
    assert_eq!(
        borel_ring(6, 2)
            .unwrap()
            .standard_monomials(4)
            .unwrap()
            .len(),
        3
    );
    let key = RingKey::Borel { n: 6, k: 2 };
    assert_eq!(
        common::quotient_dim_by_row_reduction(&key.table(), &key.generators().unwrap(), 4),
        3
    );
    assert!(matches!(borel_ring(2, 3), Err(Error::InvalidParams(_))));
    assert!(matches!(borel_ring(7, 4), Err(Error::InvalidParams(_))));
}

#[test]
fn image_ring_examples() {
    let mut j7 = image_ring(7).unwrap();
    let shown: Vec<String> = j7.gb().elements().iter().map(|g| g.to_string()).collect();
    assert_eq!(shown, ["w3^3", "w2^2*w3", "w2^3 + w3^2"]);
    assert_eq!(j7.standard_monomials(8).unwrap().len(), 1);
    for n in 6..20 {
        assert_eq!(
            image_ring(n).unwrap().standard_monomials(1).unwrap().len(),
            0
        );
    }
}

#[test]
fn oriented_examples() {
    let mut r = oriented_ring(params(3, Case::Minus1, false)).unwrap();
    assert_eq!(
        r.hilbert_function(12).unwrap(),
        [1, 0, 1, 1, 2, 1, 2, 1, 2, 1, 1, 0, 1]
    );
    let table = r.table().clone();
    let top: Vec<String> = r
        .standard_monomials(12)
        .unwrap()
        .iter()
        .map(|m| grasschar_core::text::monomial_to_string(&table, m))
        .collect();
    assert_eq!(top, ["a*w2*w3^2"]);
    for t in 3..=5 {
        for case in Case::ALL {
            for gamma in [false, true] {
                let mut q = oriented_ring(params(t, case, gamma)).unwrap();
                let a = PolyGF2::var(q.table(), "a").unwrap();
                let nf = q.normal_form(&a.square().unwrap()).unwrap();
                assert!(nf.terms().iter().all(|m| m.exponent(0) < 2));
                // every standard monomial is at most linear in a
                let top = 3 * (pow2(t) - case.offset() - 3);
                for d in 0..=top {
                    assert!(q
                        .standard_monomials(d)
                        .unwrap()
                        .iter()
                        .all(|m| m.exponent(0) < 2));
                }
            }
        }
    }
}

#[test]
fn oriented_matches_row_reduction_oracle() {
    for case in Case::ALL {
        let key = RingKey::Oriented(params(4, case, true));
        let mut q = key.quotient(key.compute_gb().unwrap());
        let top = key.top_degree().unwrap() + 2;
        let oracle =
            common::hilbert_by_row_reduction(&key.table(), &key.generators().unwrap(), top);
        assert_eq!(q.hilbert_function(top).unwrap(), oracle, "{case}");
    }
}

#[test]
fn k2_examples() {
    let mut r = oriented_ring_k2(3).unwrap();
    assert_eq!(r.standard_monomials(4).unwrap().len(), 2);
    for t in 3..=5 {
        let r = oriented_ring_k2(t).unwrap();
        let tab = r.table().clone();
        let b = PolyGF2::var(&tab, "b").unwrap();
        let w2 = PolyGF2::var(&tab, "w2").unwrap();
        let expected = &w2.checked_pow(pow2(t - 1) - 2).unwrap() * &b;
        assert_eq!(r.normal_form(&b.square().unwrap()).unwrap(), expected);
        assert!(r
            .normal_form(&w2.checked_pow(pow2(t) - 4).unwrap())
            .unwrap()
            .is_zero());
    }
}

#[test]
fn restriction_examples() {
    let g83 = sealed(borel_ring(8, 3).unwrap(), 8);
    let g73 = sealed(borel_ring(7, 3).unwrap(), 8);
    let mut i = restriction_map(RestrictionKind::IStar, &g83, &g73).unwrap();
    assert_eq!(*i.matrix(0).unwrap(), BitMatrix::identity(1));

    let g62 = sealed(borel_ring(6, 2).unwrap(), 8);
    let j = restriction_map(RestrictionKind::JStar, &g73, &g62).unwrap();
    let w3 = PolyGF2::var(g73.table(), "w3").unwrap();
    assert!(j.apply(&w3).unwrap().is_zero());
    let w2 = PolyGF2::var(g73.table(), "w2").unwrap();
    assert_eq!(j.apply(&w2).unwrap().to_string(), "w2");

    // w2 -> w2 wherever both degree-2 slices are 1-dimensional
    let s = sealed(borel_ring(4, 2).unwrap(), 4);
    let t = sealed(borel_ring(3, 2).unwrap(), 4);
    let mut r = restriction_map(RestrictionKind::IStar, &s, &t).unwrap();
    let w2s = PolyGF2::var(s.table(), "w2").unwrap();
    let w2t = PolyGF2::var(t.table(), "w2").unwrap();
    assert_eq!(r.apply(&w2s).unwrap(), t.normal_form(&w2t).unwrap());
    // one column per source basis element, one row per target basis element
    let m = r.matrix(2).unwrap();
    assert_eq!((m.rows(), m.cols()), (t.dim(2).unwrap(), s.dim(2).unwrap()));

    // wrong number of generators
    assert!(matches!(
        restriction_map(RestrictionKind::IStar, &g73, &g62),
        Err(Error::GeneratorDegreeMismatch(_))
    ));
}

#[test]
fn mult_w1_examples() {
    let g83 = sealed(borel_ring(8, 3).unwrap(), 16);
    let mut m = mult_w1(&g83).unwrap();
    assert_eq!(m.degree_shift(), 1);
    assert_eq!(m.matrix(0).unwrap().rank(), 1);
    assert!(m.kernel(0).unwrap().is_empty());

    let g73 = sealed(borel_ring(7, 3).unwrap(), 13);
    let mut m = mult_w1(&g73).unwrap();
    assert_eq!(g73.dim(12).unwrap(), 1);
    assert!(m.matrix(12).unwrap().is_zero());
    assert_eq!(m.kernel(12).unwrap().len(), 1);

    let j7 = image_ring(7).unwrap();
    assert_eq!(
        mult_w1(&j7).err(),
        Some(Error::MissingVariable("w1".into()))
    );

    let not_homogeneous = parse_poly("w1 + w2", g73.table()).unwrap();
    assert_eq!(
        multiplication_map(&g73, not_homogeneous).err(),
        Some(Error::NonHomogeneous)
    );
}

#[test]
fn matrix_kernel_examples() {
    assert!(matrix_kernel_basis(&BitMatrix::identity(3)).is_empty());
    assert_eq!(matrix_kernel_basis(&BitMatrix::zeros(2, 3)).len(), 3);
    let k = matrix_kernel_basis(&BitMatrix::from_rows(&[&[1, 1], &[0, 0]]));
    assert_eq!(k.len(), 1);
    assert!(k[0].get(0) && k[0].get(1));
}

#[test]
fn kernel_intersection_examples() {
    let g83 = sealed(borel_ring(8, 3).unwrap(), 8);
    let g73 = sealed(borel_ring(7, 3).unwrap(), 8);
    let mut f = mult_w1(&g83).unwrap();
    let mut g = restriction_map(RestrictionKind::IStar, &g83, &g73).unwrap();
    assert!(kernel_intersection(&mut f, &mut g, 7).unwrap().is_empty());
    assert!(kernel_intersection(&mut f, &mut g, 0).unwrap().is_empty());

    let g62 = sealed(borel_ring(6, 2).unwrap(), 8);
    let mut f = mult_w1(&g73).unwrap();
    let mut g = restriction_map(RestrictionKind::JStar, &g73, &g62).unwrap();
    assert!(kernel_intersection(&mut f, &mut g, 4).unwrap().is_empty());
    // each map alone has a kernel in degree 4
    assert!(!f.kernel(4).unwrap().is_empty());
    assert!(!g.kernel(4).unwrap().is_empty());

    let mut other = mult_w1(&g83).unwrap();
    assert_eq!(
        kernel_intersection(&mut f, &mut other, 4),
        Err(Error::SourceMismatch)
    );
}

#[test]
fn kernel_elements_are_in_both_kernels() {
    let g73 = sealed(borel_ring(7, 3).unwrap(), 8);
    let g72 = sealed(borel_ring(6, 3).unwrap(), 8);
    let mut f = mult_w1(&g73).unwrap();
    let mut g = restriction_map(RestrictionKind::IStar, &g73, &g72).unwrap();
    for d in 0..=7 {
        let both = kernel_intersection(&mut f, &mut g, d).unwrap();
        let kf = f.kernel(d).unwrap().len();
        let kg = g.kernel(d).unwrap().len();
        assert!(both.len() <= kf.min(kg));
        for x in both {
            assert!(f.apply(&x).unwrap().is_zero());
            assert!(g.apply(&x).unwrap().is_zero());
        }
    }
}

#[test]
fn gysin_examples() {
    let d = gysin_dims(7, 3, 12).unwrap();
    assert_eq!(d, [1, 0, 1, 1, 2, 1, 2, 1, 2, 1, 1, 0, 1]);
    for (n, k) in [(5, 2), (7, 3), (9, 3), (4, 1)] {
        assert_eq!(gysin_dims(n, k, 0).unwrap(), [1]);
    }
    assert_eq!(gysin_dims(6, 2, 4).unwrap()[4], 2);
    // the oriented double cover of RP^{n-1} is S^{n-1}
    assert_eq!(gysin_dims(5, 1, 6).unwrap(), [1, 0, 0, 0, 1, 0, 0]);
}

#[test]
fn gysin_matches_presented_rings() {
    for t in 3..=4 {
        for case in Case::ALL {
            for gamma in [false, true] {
                let p = params(t, case, gamma);
                let top = p.manifold_dim();
                let mut q = oriented_ring(p).unwrap();
                assert_eq!(
                    q.hilbert_function(top).unwrap(),
                    gysin_dims(p.n(), 3, top).unwrap(),
                    "{p:?}"
                );
            }
        }
    }
}

#[test]
fn lemma_membership() {
    for t in 3..=5 {
        let gb = RingKey::ImageJ { n: pow2(t) - 2 }.compute_gb().unwrap();
        let w = PolyGF2::monomial(gb.table(), Monomial::new(&[(pow2(t) - 4) as u16, 0]));
        assert!(ideal_member(&w, &gb).unwrap());
        let gb1 = RingKey::ImageJ { n: pow2(t) - 1 }.compute_gb().unwrap();
        assert!(!ideal_member(&w, &gb1).unwrap());
    }
}

#[test]
fn params_validation() {
    assert_eq!(
        GrassmannParams::new(2, Case::Minus1, false),
        Err(Error::UnsupportedT(2))
    );
    let p = params(5, Case::Minus3, false);
    assert_eq!((p.n(), p.a_degree(), p.manifold_dim()), (29, 28, 78));
    assert_eq!("minus2".parse::<Case>().unwrap(), Case::Minus2);
    assert!("minus4".parse::<Case>().is_err());
}
