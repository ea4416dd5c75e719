//! Exact values checked against direct brute force written from the
//! definitions, without the library's coset machinery.

use cobound::building::FlagComplexA;
use cobound::corpus;
use cobound::rational::{int, ratio};
use cobound::{h_exact, PureComplex, Ratio, SearchOptions};
use num_bigint::BigInt;

/// Facet counts per face, by direct subset tests against the facet list.
fn counts(x: &PureComplex, dim: isize) -> Vec<u64> {
    let top = x.faces(x.dim() as isize);
    x.faces(dim)
        .iter()
        .map(|s| {
            top.iter()
                .filter(|f| s.vertices().iter().all(|v| f.vertices().contains(v)))
                .count() as u64
        })
        .collect()
}

/// `d: C^{k} → C^{k+1}` as bitmasks over faces, from vertex lists.
fn coboundary_masks(x: &PureComplex, k: isize) -> Vec<u64> {
    let lower = x.faces(k);
    let upper = x.faces(k + 1);
    (0..lower.len())
        .map(|i| {
            let s = lower[i].vertices();
            upper
                .iter()
                .enumerate()
                .filter(|(_, t)| s.iter().all(|v| t.vertices().contains(v)))
                .fold(0u64, |m, (j, _)| m | 1 << j)
        })
        .collect()
}

fn apply(masks: &[u64], phi: u64) -> u64 {
    (0..masks.len())
        .filter(|i| phi >> i & 1 == 1)
        .fold(0, |a, i| a ^ masks[i])
}

fn weighted(c: &[u64], mask: u64) -> u64 {
    (0..c.len()).filter(|i| mask >> i & 1 == 1).map(|i| c[i]).sum()
}

/// `min_{φ ∉ B^k} ‖dφ‖ / ‖[φ]‖`, enumerating all of `C^k` and `C^{k-1}`.
fn brute_h(x: &PureComplex, k: usize) -> Ratio {
    let kd = k as isize;
    let fk = x.f(kd);
    assert!(fk <= 20 && x.f(kd - 1) <= 12);
    let ck = counts(x, kd);
    let ck1 = counts(x, kd + 1);
    let d = coboundary_masks(x, kd);
    let d_prev = coboundary_masks(x, kd - 1);
    let cob: Vec<u64> = (0..1u64 << d_prev.len()).map(|psi| apply(&d_prev, psi)).collect();
    let den_k = cobound::rational::binomial(x.dim() as i64 + 1, k as i64 + 1) * BigInt::from(x.f(x.dim() as isize));
    let den_k1 = cobound::rational::binomial(x.dim() as i64 + 1, k as i64 + 2) * BigInt::from(x.f(x.dim() as isize));
    let mut best: Option<Ratio> = None;
    for phi in 1..1u64 << fk {
        let dist = cob.iter().map(|&b| weighted(&ck, phi ^ b)).min().unwrap();
        if dist == 0 {
            continue;
        }
        let r = Ratio::new(
            BigInt::from(weighted(&ck1, apply(&d, phi))) * &den_k,
            BigInt::from(dist) * &den_k1,
        );
        if best.as_ref().is_none_or(|b| &r < b) {
            best = Some(r);
        }
    }
    best.unwrap_or_else(|| int(0))
}

#[test]
fn exact_search_matches_brute_force() {
    let cases: Vec<(PureComplex, usize)> = vec![
        (corpus::simplex(2), 0),
        (corpus::simplex(2), 1),
        (corpus::simplex(3), 0),
        (corpus::simplex(3), 1),
        (corpus::simplex(3), 2),
        (corpus::simplex(4), 1),
        (corpus::partition(1, 2), 0),
        (corpus::partition(2, 2), 0),
        (corpus::partition(2, 2), 1),
        (corpus::partition(1, 3), 0),
        (corpus::simplex_boundary(3), 0),
        (corpus::simplex_boundary(3), 1),
        (corpus::rp2(), 0),
        (corpus::rp2(), 1),
    ];
    for (x, k) in cases {
        let got = h_exact(&x, k, SearchOptions::default()).unwrap().value;
        assert_eq!(got, brute_h(&x, k), "f={:?} k={k}", x.f_vector());
    }
}

/// Weighted edge expansion of the vertex graph over all vertex subsets,
/// enumerated in Gray-code order with an incremental cut.
fn cheeger(x: &PureComplex) -> Ratio {
    let nv = x.f(0);
    assert!(nv <= 30);
    let cv = counts(x, 0);
    let ce = counts(x, 1);
    let edges: Vec<(usize, usize, u64)> = x
        .faces(1)
        .iter()
        .zip(&ce)
        .map(|(e, &c)| (e.vertices()[0] as usize, e.vertices()[1] as usize, c))
        .collect();
    let mut adj = vec![Vec::new(); nv];
    for &(a, b, c) in &edges {
        adj[a].push((b, c));
        adj[b].push((a, c));
    }
    let total: u64 = cv.iter().sum();
    // both weights share the factor f_n; the binomials differ
    let n = x.dim() as i64;
    let (bv, be) = (n + 1, (n + 1) * n / 2);
    let mut inside = vec![false; nv];
    let (mut cut, mut vol) = (0u64, 0u64);
    let mut best: Option<Ratio> = None;
    // vertex nv-1 stays outside: complements give the same ratio
    for t in 1u64..1u64 << (nv - 1) {
        let v = t.trailing_zeros() as usize;
        let entering = !inside[v];
        for &(u, c) in &adj[v] {
            if inside[u] == entering {
                cut -= c;
            } else {
                cut += c;
            }
        }
        inside[v] = entering;
        if entering {
            vol += cv[v];
        } else {
            vol -= cv[v];
        }
        let small = vol.min(total - vol);
        let r = Ratio::new(BigInt::from(cut * bv as u64), BigInt::from(small * be as u64));
        if best.as_ref().is_none_or(|b| &r < b) {
            best = Some(r);
        }
    }
    best.unwrap()
}

pub const H0_FANO: (i64, i64) = (2, 3);

#[test]
fn fano_building_vertex_expansion() {
    let b = FlagComplexA::new(1, 2).unwrap();
    let x = b.complex();
    let oracle = cheeger(x);
    assert_eq!(oracle, ratio(H0_FANO.0, H0_FANO.1));
    assert_eq!(h_exact(x, 0, SearchOptions::default()).unwrap().value, oracle);
    assert_eq!(brute_h(x, 0), oracle);
}

#[test]
fn ternary_building_vertex_expansion() {
    let b = FlagComplexA::new(1, 3).unwrap();
    let x = b.complex();
    assert_eq!(h_exact(x, 0, SearchOptions::default()).unwrap().value, cheeger(x));
}

#[test]
fn cheeger_agrees_on_corpus() {
    for x in [
        corpus::simplex(3),
        corpus::partition(2, 2),
        corpus::partition(2, 3),
        corpus::rp2(),
    ] {
        assert_eq!(h_exact(&x, 0, SearchOptions::default()).unwrap().value, cheeger(&x));
    }
}
