//! Classical bases checked against explicit polynomials in finitely many
//! variables.

use std::collections::BTreeMap;

use symfun::classical::{expand_in_monomials, lr_product, monomial_product};
use symfun::{partitions, shared_ring, BasisId, Coeff, Partition, SymElement};

/// Integer polynomial: exponent vector -> coefficient.
type MPoly = BTreeMap<Vec<u32>, i64>;

fn mul(a: &MPoly, b: &MPoly) -> MPoly {
    let mut out = MPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn add_scaled(a: &mut MPoly, b: &MPoly, k: i64) {
    for (e, c) in b {
        *a.entry(e.clone()).or_default() += k * c;
    }
    a.retain(|_, c| *c != 0);
}

fn one(nvars: usize) -> MPoly {
    MPoly::from([(vec![0; nvars], 1)])
}

/// All exponent vectors of total degree `d` in `nvars` variables.
fn exponents(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    if nvars == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in exponents(nvars - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn h_k(nvars: usize, k: u32) -> MPoly {
    exponents(nvars, k).into_iter().map(|e| (e, 1)).collect()
}

fn e_k(nvars: usize, k: u32) -> MPoly {
    exponents(nvars, k)
        .into_iter()
        .filter(|e| e.iter().all(|&x| x <= 1))
        .map(|e| (e, 1))
        .collect()
}

fn p_k(nvars: usize, k: u32) -> MPoly {
    (0..nvars)
        .map(|i| {
            let mut e = vec![0; nvars];
            e[i] = k;
            (e, 1)
        })
        .collect()
}

fn m_lambda(nvars: usize, lambda: &Partition) -> MPoly {
    let mut sorted: Vec<u32> = (0..nvars).map(|i| lambda.part(i)).collect();
    sorted.sort_unstable();
    exponents(nvars, lambda.size() as u32)
        .into_iter()
        .filter(|e| {
            let mut s = e.clone();
            s.sort_unstable();
            s == sorted
        })
        .map(|e| (e, 1))
        .collect()
}

fn multiplicative(nvars: usize, lambda: &Partition, gen: fn(usize, u32) -> MPoly) -> MPoly {
    lambda
        .parts()
        .iter()
        .fold(one(nvars), |acc, &k| mul(&acc, &gen(nvars, k)))
}

/// Jacobi-Trudi: `s_lambda = det(h_{lambda_i - i + j})`.
fn schur(nvars: usize, lambda: &Partition) -> MPoly {
    let l = lambda.len();
    let entry = |i: usize, j: usize| -> MPoly {
        let k = lambda.part(i) as i64 - i as i64 + j as i64;
        match k {
            k if k < 0 => MPoly::new(),
            0 => one(nvars),
            k => h_k(nvars, k as u32),
        }
    };
    let mut out = MPoly::new();
    for (perm, sign) in permutations(l) {
        let term = (0..l).fold(one(nvars), |acc, i| mul(&acc, &entry(i, perm[i])));
        add_scaled(&mut out, &term, sign);
    }
    if l == 0 {
        return one(nvars);
    }
    out
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            // inserting at pos moves n-1 past (len - pos) elements
            let sign = if (p.len() - pos) % 2 == 0 { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

/// Read off the monomial expansion (coefficient of `x^mu` for each `mu`).
fn m_coeffs(f: &MPoly, nvars: usize, n: usize) -> BTreeMap<Partition, Coeff> {
    partitions(n)
        .into_iter()
        .filter(|mu| mu.len() <= nvars)
        .filter_map(|mu| {
            let e: Vec<u32> = (0..nvars).map(|i| mu.part(i)).collect();
            let c = f.get(&e).copied().unwrap_or(0);
            (c != 0).then(|| (mu, Coeff::from_int(c)))
        })
        .collect()
}

fn element_terms(x: &SymElement) -> BTreeMap<Partition, Coeff> {
    x.terms().clone()
}

fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

#[test]
fn monomial_expansions_match_polynomials() {
    for n in 1..=5 {
        for lambda in partitions(n) {
            let cases: [(&str, MPoly); 4] = [
                ("h", multiplicative(n, &lambda, h_k)),
                ("e", multiplicative(n, &lambda, e_k)),
                ("p", multiplicative(n, &lambda, p_k)),
                ("s", schur(n, &lambda)),
            ];
            for (b, poly) in cases {
                let got = expand_in_monomials(b, &lambda).unwrap();
                assert_eq!(element_terms(&got), m_coeffs(&poly, n, n), "{b}{lambda}");
            }
        }
    }
}

#[test]
fn spec_monomial_expansions() {
    let ring = shared_ring();
    let m = BasisId::new("m");
    let show = |b: &str, v: &[u32]| ring.convert(&ring.element(b, v.to_vec()).unwrap(), &m).unwrap().to_string();
    assert_eq!(show("h", &[2]), "m[1,1] + m[2]");
    assert_eq!(show("e", &[2]), "m[1,1]");
    assert_eq!(show("p", &[2]), "m[2]");
    assert_eq!(show("s", &[2, 1]), "2*m[1,1,1] + m[2,1]");
    assert_eq!(show("p", &[2, 1]), "m[2,1] + m[3]");
}

#[test]
fn monomial_product_matches_polynomials() {
    for a in 0..=3 {
        for b in 0..=3 {
            let nvars = a + b;
            for lambda in partitions(a) {
                for mu in partitions(b) {
                    let poly = mul(&m_lambda(nvars, &lambda), &m_lambda(nvars, &mu));
                    let got = SymElement::from_terms("m", monomial_product(&lambda, &mu));
                    assert_eq!(element_terms(&got), m_coeffs(&poly, nvars, nvars), "{lambda} {mu}");
                }
            }
        }
    }
    let show = |x: &[u32], y: &[u32]| SymElement::from_terms("m", monomial_product(&part(x), &part(y))).to_string();
    assert_eq!(show(&[1], &[1]), "2*m[1,1] + m[2]");
    assert_eq!(show(&[2], &[1]), "m[2,1] + m[3]");
    assert_eq!(show(&[2, 1], &[]), "m[2,1]");
}

#[test]
fn products_in_the_ring() {
    let ring = shared_ring();
    let el = |b: &str, v: &[u32]| ring.element(b, v.to_vec()).unwrap();
    assert_eq!(ring.mul(&el("p", &[2]), &el("p", &[1])).unwrap(), el("p", &[2, 1]));
    assert_eq!(ring.mul(&el("s", &[1]), &el("s", &[1])).unwrap().to_string(), "s[1,1] + s[2]");
    assert_eq!(
        ring.mul(&el("s", &[2, 1]), &el("s", &[1])).unwrap().to_string(),
        "s[2,1,1] + s[2,2] + s[3,1]"
    );
}

#[test]
fn lr_product_matches_polynomials() {
    for a in 1..=3 {
        for b in 1..=3 {
            let nvars = a + b;
            for lambda in partitions(a) {
                for mu in partitions(b) {
                    let poly = mul(&schur(nvars, &lambda), &schur(nvars, &mu));
                    let got = SymElement::from_terms("s", lr_product(&lambda, &mu));
                    let got_m = shared_ring().convert(&got, &BasisId::new("m")).unwrap();
                    assert_eq!(element_terms(&got_m), m_coeffs(&poly, nvars, nvars), "{lambda} {mu}");
                }
            }
        }
    }
}

#[test]
fn lr_product_agrees_with_power_sum_route() {
    let ring = shared_ring();
    let (s, p) = (BasisId::new("s"), BasisId::new("p"));
    for a in 1..=5 {
        for b in a..=5 {
            for lambda in partitions(a) {
                for mu in partitions(b) {
                    let direct = SymElement::from_terms("s", lr_product(&lambda, &mu));
                    let fp = ring.convert(&SymElement::basis_element("s", lambda.clone()), &p).unwrap();
                    let gp = ring.convert(&SymElement::basis_element("s", mu.clone()), &p).unwrap();
                    let via_p = ring.convert(&ring.mul(&fp, &gp).unwrap(), &s).unwrap();
                    assert_eq!(direct, via_p, "{lambda} * {mu}");
                }
            }
        }
    }
}

#[test]
fn h_to_s_is_transpose_of_s_to_m() {
    let ring = shared_ring();
    let (h, s, m) = (BasisId::new("h"), BasisId::new("s"), BasisId::new("m"));
    for n in 0..=6 {
        let hs = ring.conversion_matrix(&h, &s, n).unwrap();
        let sm = ring.conversion_matrix(&s, &m, n).unwrap();
        assert_eq!(*hs, sm.transpose(), "degree {n}");
    }
}

#[test]
fn all_classical_pairs_reachable() {
    let ring = shared_ring();
    let names = ["m", "e", "h", "p", "s"];
    for a in names {
        for b in names {
            for n in 0..=6 {
                let ab = ring.conversion_matrix(&BasisId::new(a), &BasisId::new(b), n).unwrap();
                let ba = ring.conversion_matrix(&BasisId::new(b), &BasisId::new(a), n).unwrap();
                assert!(ab.mul(&ba).unwrap().is_identity(), "{a} {b} {n}");
            }
        }
    }
}

#[test]
fn omega_exchanges_e_and_h() {
    let ring = shared_ring();
    let m = BasisId::new("m");
    for n in 0..=6 {
        for lambda in partitions(n) {
            let h = SymElement::basis_element("h", lambda.clone());
            let e = SymElement::basis_element("e", lambda.clone());
            let wh = ring.apply_operator("omega", &h).unwrap();
            assert_eq!(ring.convert(&wh, &m).unwrap(), ring.convert(&e, &m).unwrap(), "{lambda}");
        }
    }
}
