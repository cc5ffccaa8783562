use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use wreathmatch::algebra::{Monomial, MultiPoly, Var};
use wreathmatch::series::{egf_inverse, egf_mul};
use wreathmatch::signed::{
    bi_match_starts, nlap, reduce_perm, reduce_word, reverse_complement, stats, Transform,
};
use wreathmatch::{Assignment, Family, PatternSet, PqEgf, SignedPermutation};

const DIM: usize = 5;

/// Dense coefficient array indexed by exponents, each below `DIM`.
#[derive(Clone, Debug, PartialEq)]
struct Dense(Vec<i64>);

impl Dense {
    fn zero(side: usize) -> Self {
        Dense(vec![0; side.pow(4)])
    }

    fn side(&self) -> usize {
        (self.0.len() as f64).powf(0.25).round() as usize
    }

    fn idx(side: usize, e: [u32; 4]) -> usize {
        e.iter().fold(0, |acc, &x| acc * side + x as usize)
    }

    fn add(&self, o: &Dense) -> Dense {
        Dense(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    fn mul(&self, o: &Dense) -> Dense {
        let s = self.side();
        let t = 2 * s - 1;
        let mut out = Dense::zero(t);
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let ea = unindex(s, i);
            for (j, &b) in o.0.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let eb = unindex(s, j);
                let e = std::array::from_fn(|v| ea[v] + eb[v]);
                out.0[Dense::idx(t, e)] += a * b;
            }
        }
        out
    }

    fn to_poly(&self) -> MultiPoly {
        let s = self.side();
        let mut p = MultiPoly::zero();
        for (i, &c) in self.0.iter().enumerate() {
            if c != 0 {
                p.add_term(Monomial(unindex(s, i)), BigInt::from(c));
            }
        }
        p
    }
}

fn unindex(side: usize, mut i: usize) -> [u32; 4] {
    let mut e = [0u32; 4];
    for v in (0..4).rev() {
        e[v] = (i % side) as u32;
        i /= side;
    }
    e
}

fn dense() -> impl Strategy<Value = Dense> {
    proptest::collection::btree_map((0..3u32, 0..3u32, 0..3u32, 0..3u32), -5i64..=5, 0..6).prop_map(
        |m: BTreeMap<(u32, u32, u32, u32), i64>| {
            let mut d = Dense::zero(DIM);
            for ((a, b, c, x), v) in m {
                d.0[Dense::idx(DIM, [a, b, c, x])] += v;
            }
            d
        },
    )
}

fn element() -> impl Strategy<Value = SignedPermutation> {
    (0usize..=6, 1u32..=3).prop_flat_map(|(n, k)| {
        (
            Just((1..=n as u32).collect::<Vec<u32>>()).prop_shuffle(),
            proptest::collection::vec(0..k, n),
            Just(k),
        )
            .prop_map(|(sigma, word, k)| SignedPermutation::new(sigma, word, k).expect("valid element"))
    })
}

fn poly_in_pqr() -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec((0..3u32, 0..3u32, 0..2u32, -4i64..=4), 0..4).prop_map(|terms| {
        let mut p = MultiPoly::zero();
        for (a, b, c, v) in terms {
            p.add_term(Monomial([a, b, c, 0]), BigInt::from(v));
        }
        p
    })
}

fn series(order: usize, unit: bool) -> impl Strategy<Value = PqEgf> {
    proptest::collection::vec(poly_in_pqr(), order + 1).prop_map(move |mut c| {
        if unit {
            c[0] = MultiPoly::one();
        }
        PqEgf::from_coeffs(c, &Assignment::none()).expect("nonempty")
    })
}

fn exhaustive_max(starts: &[usize], len: usize) -> usize {
    (0u32..1 << starts.len())
        .filter(|mask| {
            let chosen: Vec<usize> = (0..starts.len()).filter(|i| mask & (1 << i) != 0).map(|i| starts[i]).collect();
            chosen.windows(2).all(|w| w[1] >= w[0] + len)
        })
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

const TRANSFORMS: [Transform; 3] = [Transform::Identity, Transform::Reverse, Transform::Complement];

proptest! {
    #[test]
    fn poly_add_matches_dense(a in dense(), b in dense()) {
        prop_assert_eq!(&a.to_poly() + &b.to_poly(), a.add(&b).to_poly());
    }

    #[test]
    fn poly_mul_matches_dense(a in dense(), b in dense()) {
        prop_assert_eq!(&a.to_poly() * &b.to_poly(), a.mul(&b).to_poly());
    }

    #[test]
    fn poly_ring_laws(a in dense(), b in dense(), c in dense()) {
        let (a, b, c) = (a.to_poly(), b.to_poly(), c.to_poly());
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, MultiPoly::zero());
    }

    #[test]
    fn poly_substitution_is_a_homomorphism(a in dense(), b in dense(), p in -2i64..=2, x in -2i64..=2) {
        let s = Assignment::none().with(Var::P, p).with(Var::X, x);
        let (a, b) = (a.to_poly(), b.to_poly());
        prop_assert_eq!((&a * &b).substitute(&s), &a.substitute(&s) * &b.substitute(&s));
    }

    #[test]
    fn egf_ring_axioms((a, b, c) in (0usize..=8).prop_flat_map(|o| (series(o, false), series(o, false), series(o, false)))) {
        let ab = egf_mul(&a, &b).unwrap();
        prop_assert_eq!(&ab, &egf_mul(&b, &a).unwrap());
        prop_assert_eq!(egf_mul(&ab, &c).unwrap(), egf_mul(&a, &egf_mul(&b, &c).unwrap()).unwrap());
        prop_assert_eq!(
            egf_mul(&a, &b.add(&c).unwrap()).unwrap(),
            ab.add(&egf_mul(&a, &c).unwrap()).unwrap()
        );
        let one = PqEgf::one(a.order(), &Assignment::none());
        prop_assert_eq!(egf_mul(&one, &a).unwrap(), a);
    }

    #[test]
    fn egf_inverse_is_inverse(f in (0usize..=8).prop_flat_map(|o| series(o, true))) {
        let inv = egf_inverse(&f).unwrap();
        prop_assert_eq!(egf_mul(&f, &inv).unwrap(), PqEgf::one(f.order(), &Assignment::none()));
    }

    #[test]
    fn reduce_word_idempotent(w in proptest::collection::vec(-4i64..=4, 0..=8)) {
        let once = reduce_word(&w);
        let again: Vec<i64> = once.iter().map(|&c| i64::from(c)).collect();
        prop_assert_eq!(reduce_word(&again), once);
    }

    #[test]
    fn reduce_perm_idempotent(v in proptest::collection::btree_set(-100i64..100, 0..=8), seed in any::<u64>()) {
        let mut v: Vec<i64> = v.into_iter().collect();
        let len = v.len().max(1);
        v.rotate_left((seed as usize) % len);
        let once = reduce_perm(&v).unwrap();
        let again: Vec<i64> = once.iter().map(|&c| i64::from(c)).collect();
        prop_assert_eq!(reduce_perm(&again).unwrap(), once);
    }

    #[test]
    fn phi_maps_are_involutions(g in element(), a in 0usize..3, b in 0usize..3) {
        let (a, b) = (TRANSFORMS[a], TRANSFORMS[b]);
        prop_assert_eq!(reverse_complement(&reverse_complement(&g, a, b), a, b), g);
    }

    #[test]
    fn rises_are_reversed_descents(g in element()) {
        let s = stats(&g);
        let t = stats(&reverse_complement(&g, Transform::Reverse, Transform::Reverse));
        prop_assert_eq!((s.ris, s.wris, s.sris), (t.des, t.wdes, t.sdes));
        prop_assert_eq!((s.inv + s.coinv) as usize, g.n() * g.n().saturating_sub(1) / 2);
    }

    #[test]
    fn greedy_nlap_is_maximal(g in element(), f in 0usize..4) {
        let ps = Family::ALL[f].pattern_set();
        let starts = bi_match_starts(&g, &ps);
        prop_assert_eq!(nlap(&g, &ps), exhaustive_max(&starts, ps.pattern_len()));
        let d = PatternSet::descents();
        prop_assert_eq!(nlap(&g, &d), exhaustive_max(&bi_match_starts(&g, &d), 2));
    }
}
