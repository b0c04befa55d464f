mod common;

use std::collections::HashSet;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use proptest::prelude::*;

use common::*;
use padic_functionals::exact::{charpoly, Rational};
use padic_functionals::factor::{bezout_cofactors, hensel_split, unit_root_count};
use padic_functionals::groups::{GroupElement, InductivePrefix};
use padic_functionals::padic::{howell_form, left_kernel, PadicMatrix, PadicRing, PadicRowVec};
use padic_functionals::quasi::power_congruence;
use padic_functionals::{IntMatrix, Prime, RatVector, StationaryPresentation};

fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

fn small_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5])
}

fn square(r: usize, lo: i64, hi: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(lo..=hi, r), r)
}

fn nonsingular(max_r: usize, lo: i64, hi: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_r)
        .prop_flat_map(move |r| square(r, lo, hi))
        .prop_map(|rows| int_matrix(&rows))
        .prop_filter("nonsingular", |m| !charpoly(m).unwrap().last().unwrap().is_zero())
}

fn all_vectors(q: u64, dim: usize) -> Vec<Vec<u64>> {
    (0..q.pow(dim as u32))
        .map(|mut i| {
            (0..dim)
                .map(|_| {
                    let x = i % q;
                    i /= q;
                    x
                })
                .collect()
        })
        .collect()
}

/// Additive closure of the generators in `(Z/q)^dim`.
fn brute_span(q: u64, dim: usize, gens: &[Vec<u64>]) -> HashSet<Vec<u64>> {
    let mut seen: HashSet<Vec<u64>> = HashSet::from([vec![0; dim]]);
    let mut frontier = vec![vec![0; dim]];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y: Vec<u64> = x.iter().zip(g).map(|(a, b)| (a + b) % q).collect();
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}

fn row(ring: &PadicRing, x: &[u64]) -> PadicRowVec {
    PadicRowVec::new(ring, x.iter().map(|&v| BigUint::from(v)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn howell_form_matches_brute_span(
        (p, n) in prop::sample::select(vec![(2u64, 1u32), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)]),
        dim in 1usize..=3,
        raw in prop::collection::vec(prop::collection::vec(0u64..1000, 3), 0..4),
    ) {
        let q = p.pow(n);
        let ring = PadicRing::new(prime(p), n).unwrap();
        let gens: Vec<Vec<u64>> = raw.iter().map(|g| g[..dim].iter().map(|x| x % q).collect()).collect();
        let module = howell_form(&ring, dim, &gens.iter().map(|g| row(&ring, g)).collect::<Vec<_>>()).unwrap();
        let span = brute_span(q, dim, &gens);
        for x in all_vectors(q, dim) {
            prop_assert_eq!(module.contains(&row(&ring, &x)), span.contains(&x), "{:?}", x);
        }
        prop_assert_eq!(p.pow(module.log_cardinality() as u32) as usize, span.len());
        // the canonical form does not depend on the generators used
        let rebuilt = howell_form(&ring, dim, &module.basis()).unwrap();
        prop_assert_eq!(&rebuilt, &module);
        let mut shuffled = gens.clone();
        shuffled.reverse();
        shuffled.extend(gens.iter().map(|g| g.iter().map(|x| (x * 2) % q).collect::<Vec<_>>()));
        let again = howell_form(&ring, dim, &shuffled.iter().map(|g| row(&ring, g)).collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(&again, &module);
    }

    #[test]
    fn left_kernel_matches_brute_force(
        (p, n) in prop::sample::select(vec![(2u64, 2u32), (2, 3), (3, 1), (3, 2)]),
        rows in 1usize..=3,
        cols in 1usize..=3,
        raw in prop::collection::vec(0u64..100, 9),
    ) {
        let q = p.pow(n);
        let ring = PadicRing::new(prime(p), n).unwrap();
        let data: Vec<u64> = raw[..rows * cols].iter().map(|x| x % q).collect();
        let m = PadicMatrix::new(&ring, rows, cols, data.iter().map(|&x| BigUint::from(x)).collect()).unwrap();
        let kernel = left_kernel(&m);
        for w in all_vectors(q, rows) {
            let annihilates = (0..cols).all(|j| (0..rows).map(|i| w[i] * data[i * cols + j]).sum::<u64>() % q == 0);
            prop_assert_eq!(kernel.contains(&row(&ring, &w)), annihilates, "{:?}", w);
        }
    }

    #[test]
    fn charpoly_matches_faddeev_leverrier(rows in (1usize..=5).prop_flat_map(|r| square(r, -20, 20))) {
        let m = int_matrix(&rows);
        prop_assert_eq!(charpoly(&m).unwrap(), charpoly_oracle(&rows_of(&m)));
    }

    #[test]
    fn hensel_split_reconstructs(
        p in small_prime(),
        n in 1u32..=40,
        tail in prop::collection::vec(-50i64..=50, 1..=6),
        scale_mask in prop::collection::vec(any::<bool>(), 6),
    ) {
        let mut chi = vec![BigInt::from(1)];
        chi.extend(tail.iter().zip(&scale_mask).map(|(&c, &s)| BigInt::from(if s { c * p as i64 } else { c })));
        let s = hensel_split(&chi, prime(p), n).unwrap();
        let m = big(p as i64).pow(n);
        let desc = |f: &padic_functionals::padic::PadicPoly| f.descending().into_iter().map(BigInt::from).collect::<Vec<_>>();
        prop_assert_eq!(poly_mul_mod(&desc(s.chi1()), &desc(s.chi0()), &m), reduce_all(&chi, &m));
        prop_assert_eq!(s.chi1().degree(), Some(unit_roots_oracle(&chi, p)));
        prop_assert_eq!(s.unit_root_count(), unit_root_count(&chi, prime(p)).unwrap());
        // u·χ¹ + v·χ⁰ = 1
        let one = poly_mul_mod(&desc(s.u()), &desc(s.chi1()), &m);
        let two = poly_mul_mod(&desc(s.v()), &desc(s.chi0()), &m);
        let len = one.len().max(two.len());
        let pad = |f: &[BigInt]| { let mut g = vec![BigInt::zero(); len - f.len()]; g.extend_from_slice(f); g };
        let sum: Vec<BigInt> = pad(&one).iter().zip(pad(&two)).map(|(a, b)| a + b).collect();
        prop_assert_eq!(reduce_all(&sum, &m), vec![BigInt::from(1)]);
        // χ⁰ ≡ x^(r−k) mod p
        let chi0_mod_p = reduce_all(&desc(s.chi0()), &big(p as i64));
        prop_assert!(chi0_mod_p[0] == BigInt::from(1) && chi0_mod_p[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn bezout_cofactors_are_cofactors(
        p in small_prime(),
        n in 1u32..=20,
        f in prop::collection::vec(-30i64..=30, 1..=4),
        g in prop::collection::vec(-30i64..=30, 1..=4),
    ) {
        let ring = PadicRing::new(prime(p), n).unwrap();
        // monic f with unit constant term against a power of x
        let mut fd: Vec<BigInt> = vec![BigInt::from(1)];
        fd.extend(f.iter().map(|&c| BigInt::from(c)));
        let last = fd.len() - 1;
        if (&fd[last] % p as i64).is_zero() { fd[last] += 1; }
        let fp = padic_functionals::padic::PadicPoly::from_descending(&ring, &fd);
        let xk = padic_functionals::padic::PadicPoly::monomial(&ring, g.len());
        let (s, t) = bezout_cofactors(&fp, &xk).unwrap();
        let total = s.mul(&fp).add(&t.mul(&xk));
        prop_assert_eq!(total, padic_functionals::padic::PadicPoly::one(&ring));
    }

    #[test]
    fn membership_agrees_with_iteration(
        a in nonsingular(3, -6, 6),
        shift in 0u32..=3,
        x in prop::collection::vec(-20i64..=20, 3),
        den in 1i64..=30,
    ) {
        let r = a.rows();
        let pres = StationaryPresentation::new(a.clone()).unwrap();
        let xs: Vec<BigInt> = x[..r].iter().map(|&c| big(c)).collect();
        // a generated member and a generic rational vector
        let member = member_from(&a, shift, &xs);
        let generic = scale(&RatVector::from_ints(&xs), 1, &big(den));
        let rows = rows_of(&a);
        for v in [member, generic] {
            let lib = pres.member(&v, 16).unwrap();
            let oracle = iterate_to_integral(&rows, &v, 200);
            prop_assert_eq!(lib.as_ref().and_then(GroupElement::certificate), oracle, "{:?}", v);
        }
    }

    #[test]
    fn distance_matches_iteration(
        a in nonsingular(3, -5, 5),
        p in prop::sample::select(vec![2u64, 3]),
        shift in 0u32..=2,
        x in prop::collection::vec(-20i64..=20, 3),
        y in prop::collection::vec(-20i64..=20, 3),
    ) {
        let r = a.rows();
        let pres = StationaryPresentation::new(a.clone()).unwrap();
        let g = member_from(&a, shift, &x[..r].iter().map(|&c| big(c)).collect::<Vec<_>>());
        let h = RatVector::from_ints(&y[..r].iter().map(|&c| big(c)).collect::<Vec<_>>());
        let rows = rows_of(&a);
        let diff = &g - &h;
        let cert = iterate_to_integral(&rows, &diff, shift as u64).unwrap();
        let j = divisibility_depth(&rows, &diff, cert, p, 6);
        let ge = pres.member(&g, 6).unwrap().unwrap();
        let he = pres.member(&h, 6).unwrap().unwrap();
        let d = pres.dp_distance(prime(p), 6, &ge, &he).unwrap();
        prop_assert_eq!(d.exponent(), j as i64);
        prop_assert_eq!(d.is_bound(), j == 6);
        // symmetric
        prop_assert_eq!(pres.dp_distance(prime(p), 6, &he, &ge).unwrap(), d);
    }

    #[test]
    fn unit_projection_norm_is_bounded_by_denominator(
        a in nonsingular(3, -5, 5),
        p in small_prime(),
        x in prop::collection::vec(-20i64..=20, 3),
        e in 0u32..=3,
    ) {
        let r = a.rows();
        let pres = StationaryPresentation::new(a).unwrap();
        let v = scale(&RatVector::from_ints(&x[..r].iter().map(|&c| big(c)).collect::<Vec<_>>()), 1, &big(p as i64).pow(e));
        let g = GroupElement::unchecked(&pres, v);
        let proj = pres.unit_projection(prime(p), 8, &g).unwrap();
        prop_assert!(proj.norm().exponent() >= -(e as i64));
    }

    #[test]
    fn stage_modules_nest(a in nonsingular(3, -5, 5), p in small_prime(), n in 1u32..=6) {
        let prefix = InductivePrefix::stationary(&a, 6).unwrap();
        let basis = StationaryPresentation::new(a).unwrap().functionals_basis(prime(p), n).unwrap();
        let mut previous = prefix.limit_prefix_functionals(prime(p), n, 0).unwrap();
        for stage in 1..=6 {
            let module = prefix.limit_prefix_functionals(prime(p), n, stage).unwrap();
            prop_assert!(module.is_submodule_of(&previous));
            prop_assert!(basis.module().is_submodule_of(&module));
            previous = module;
        }
    }

    #[test]
    fn power_congruence_is_first_repeat(
        rows in (1usize..=3).prop_flat_map(|r| square(r, -9, 9)),
        m in 2i64..=30,
    ) {
        let b = int_matrix(&rows);
        let m = big(m);
        let (k, l) = power_congruence(&b, &m).unwrap();
        prop_assert_eq!((k, l), first_repeat(&rows_of(&b), &m));
    }

    #[test]
    fn adjoining_members_is_idempotent(
        a in nonsingular(3, -3, 3),
        shift in 0u32..=1,
        x in prop::collection::vec(-20i64..=20, 3),
    ) {
        let r = a.rows();
        let pres = StationaryPresentation::new(a.clone()).unwrap();
        let z = member_from(&a, shift, &x[..r].iter().map(|&c| big(c)).collect::<Vec<_>>());
        let adj = pres.adjoin(&z).unwrap();
        // same group: old generators and z are members of the new one and vice versa
        for i in 0..r {
            let e = RatVector::unit(r, i);
            prop_assert!(adj.presentation.contains(&e, 8).unwrap().is_some());
        }
        prop_assert!(adj.presentation.contains(&z, 8).unwrap().is_some());
        for f in adj.presentation.basis().row_vectors() {
            prop_assert!(pres.member(&f, 8).unwrap().is_some());
        }
        let twice = adj.stationary.adjoin(&adj.presentation.coordinates(&z).unwrap()).unwrap();
        prop_assert_eq!(twice.stationary, adj.stationary);
    }

    #[test]
    fn rational_parsing_round_trips(n in -10_000i64..=10_000, d in 1i64..=10_000) {
        let x = Rational::new(big(n), big(d));
        let text = padic_functionals::exact::format_rational(&x);
        prop_assert_eq!(padic_functionals::exact::parse_rational(&text).unwrap(), x);
    }
}
