use std::sync::OnceLock;

use cobound::corpus;
use cobound::expansion::{coset_norm, norm, DEFAULT_BUDGET};
use cobound::f2::coboundary;
use cobound::tester::{run, TesterConfig};
use cobound::{h_exact, BitChain, BitVec, PureComplex, Ratio, SearchOptions};
use proptest::prelude::*;

fn corpus() -> &'static [PureComplex] {
    static C: OnceLock<Vec<PureComplex>> = OnceLock::new();
    C.get_or_init(corpus::small_corpus)
}

/// `h_k` for every corpus complex and `k < n`.
fn exact_values() -> &'static Vec<Vec<Ratio>> {
    static H: OnceLock<Vec<Vec<Ratio>>> = OnceLock::new();
    H.get_or_init(|| {
        corpus()
            .iter()
            .map(|x| {
                (0..x.dim())
                    .map(|k| h_exact(x, k, SearchOptions::default()).unwrap().value)
                    .collect()
            })
            .collect()
    })
}

fn chain(x: &PureComplex, k: isize, seed: &[bool]) -> BitChain {
    let f = x.f(k);
    BitChain {
        dim: k,
        bits: BitVec::from_indices(f, (0..f).filter(|&i| seed[i])),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coset_norm_is_coset_invariant(ci in 0usize..10, kk in 0usize..3, a in prop::collection::vec(any::<bool>(), 64), b in prop::collection::vec(any::<bool>(), 64)) {
        let x = &corpus()[ci];
        let k = (kk % x.dim()) as isize;
        let phi = chain(x, k, &a);
        let psi = chain(x, k - 1, &b);
        let mut moved = phi.clone();
        moved.add(&coboundary(x, &psi).unwrap());
        let (n1, r1) = coset_norm(x, &phi, DEFAULT_BUDGET).unwrap();
        let (n2, _) = coset_norm(x, &moved, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(&n1, &n2);
        prop_assert_eq!(norm(x, &r1), n1.clone());
        prop_assert!(n1 <= norm(x, &phi));
    }

    #[test]
    fn coboundary_norm_dominates(ci in 0usize..10, kk in 0usize..3, a in prop::collection::vec(any::<bool>(), 64)) {
        let x = &corpus()[ci];
        let k = kk % x.dim();
        let phi = chain(x, k as isize, &a);
        let d = norm(x, &coboundary(x, &phi).unwrap());
        let (dist, _) = coset_norm(x, &phi, DEFAULT_BUDGET).unwrap();
        prop_assert!(d >= &exact_values()[ci][k] * dist);
    }

    #[test]
    fn relabeling_preserves_expansion((ci, perm) in (0usize..10).prop_flat_map(|ci| {
        let nv = corpus()[ci].vertex_count() as u32;
        (Just(ci), Just((0..nv).collect::<Vec<u32>>()).prop_shuffle())
    })) {
        let x = &corpus()[ci];
        let facets = x
            .faces(x.dim() as isize)
            .iter()
            .map(|f| f.vertices().iter().map(|&v| perm[v as usize]).collect())
            .collect();
        let y = PureComplex::from_facets(facets).unwrap();
        prop_assert_eq!(y.f_vector(), x.f_vector());
        for k in 0..x.dim() {
            let h = h_exact(&y, k, SearchOptions::default()).unwrap().value;
            prop_assert_eq!(&h, &exact_values()[ci][k]);
        }
    }

    #[test]
    fn facet_text_round_trip(ci in 0usize..10) {
        let x = &corpus()[ci];
        let y = PureComplex::parse_facet_text(&x.to_facet_text()).unwrap();
        prop_assert_eq!(y.labels(), x.labels());
        for k in -1..=x.dim() as isize {
            prop_assert_eq!(y.faces(k), x.faces(k));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn tester_is_complete_and_deterministic(ci in 0usize..10, kk in 0usize..3, a in prop::collection::vec(any::<bool>(), 64), seed in any::<u64>()) {
        let x = &corpus()[ci];
        let k = kk % x.dim();
        let psi = chain(x, k as isize - 1, &a);
        let alpha = coboundary(x, &psi).unwrap();
        let cfg = TesterConfig::new(k, 500, seed);
        prop_assert_eq!(run(x, &alpha, &cfg).unwrap().rejections, 0);
        let phi = chain(x, k as isize, &a);
        let r1 = run(x, &phi, &cfg).unwrap();
        let r2 = run(x, &phi, &cfg).unwrap();
        prop_assert_eq!(r1.rejections, r2.rejections);
        prop_assert_eq!(r1.queries_per_trial, k + 2);
    }
}
