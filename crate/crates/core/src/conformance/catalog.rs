use std::collections::HashSet;

use num_complex::Complex;

use super::case::{CaseInput, Expected, Routine, TestCase};
use crate::numeric::{machine_params, Real};

/// Precision tag used in case ids.
fn tag<T: Real>() -> char {
    T::PREFIX
}

/// Clamp a nominal 1-based position into `[1, n]`.
fn clamp(p: usize, n: usize) -> usize {
    p.clamp(1, n)
}

/// Placement sets built from `anchors` (singles, pairs, triples, all),
/// clamped to `[1, n]` and deduplicated. Each set is sorted.
fn placements(n: usize, anchors: &[usize]) -> Vec<(String, Vec<usize>)> {
    let a: Vec<usize> = anchors.iter().map(|&p| clamp(p, n)).collect();
    let mut out: Vec<(String, Vec<usize>)> = Vec::new();
    let mut seen = HashSet::new();
    let mut push = |mut set: Vec<usize>, out: &mut Vec<(String, Vec<usize>)>| {
        set.sort_unstable();
        set.dedup();
        if seen.insert(set.clone()) {
            let label = set.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
            out.push((label, set));
        }
    };
    for &p in &a {
        push(vec![p], &mut out);
    }
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            push(vec![a[i], a[j]], &mut out);
        }
    }
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            for k in j + 1..a.len() {
                push(vec![a[i], a[j], a[k]], &mut out);
            }
        }
    }
    let all: Vec<usize> = (1..=n).collect();
    if seen.insert(all.clone()) {
        out.push(("all".to_string(), all));
    } else if let Some(e) = out.iter_mut().find(|(_, s)| *s == all) {
        e.0 = "all".to_string();
    }
    out
}

fn iamax_anchors(n: usize) -> Vec<usize> {
    vec![1, 2, n / 2, n]
}

fn nrm2_anchors(n: usize) -> Vec<usize> {
    vec![1, 2, n / 16, n / 2, n]
}

/// `(-1)^k` for 1-based `k`.
fn alt<T: Real>(k: usize, x: T) -> T {
    if k.is_multiple_of(2) {
        x
    } else {
        -x
    }
}

/// The seven ways of adding Inf around existing NaNs: `±Inf` at the first,
/// the last, or both first and last non-NaN positions, or `(-1)^k·Inf` at
/// every non-NaN position.
fn inf_variants<T: Real>(v: &[T]) -> Vec<(&'static str, Vec<T>)> {
    let free: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_nan()).collect();
    let (Some(&first), Some(&last)) = (free.first(), free.last()) else {
        return Vec::new();
    };
    let inf = T::infinity();
    let with = |pos: &[usize], val: T| {
        let mut w = v.to_vec();
        for &p in pos {
            w[p] = val;
        }
        w
    };
    let mut alt_all = v.to_vec();
    for &p in &free {
        alt_all[p] = alt(p + 1, inf);
    }
    vec![
        ("inf@first", with(&[first], inf)),
        ("-inf@first", with(&[first], -inf)),
        ("inf@last", with(&[last], inf)),
        ("-inf@last", with(&[last], -inf)),
        ("inf@first+last", with(&[first, last], inf)),
        ("-inf@first+last", with(&[first, last], -inf)),
        ("altinf@rest", alt_all),
    ]
}

/// First NaN, else first Inf, else first entry of largest magnitude.
fn three_tier<T: Real>(v: &[T]) -> usize {
    if let Some(i) = v.iter().position(|x| x.is_nan()) {
        return i + 1;
    }
    if let Some(i) = v.iter().position(|x| x.is_infinite()) {
        return i + 1;
    }
    let m = v.iter().fold(T::zero(), |m, x| m.max(x.abs()));
    v.iter().position(|x| x.abs() == m).map_or(0, |i| i + 1)
}

/// Tiers 1 and 2 for complex entries (a part being NaN / Inf makes the entry so).
fn exceptional_tier<T: Real>(v: &[Complex<T>]) -> Option<usize> {
    if let Some(i) = v.iter().position(|z| z.re.is_nan() || z.im.is_nan()) {
        return Some(i + 1);
    }
    v.iter().position(|z| z.re.is_infinite() || z.im.is_infinite()).map(|i| i + 1)
}

/// Real vectors of the IAMAX catalog with their group labels, before expectations.
fn iamax_real_vectors<T: Real>(n: usize, base: &[T]) -> Vec<(String, String, Vec<T>)> {
    let mut out = Vec::new();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut add = |group: &str, label: String, v: Vec<T>, out: &mut Vec<(String, String, Vec<T>)>| {
        if seen.insert(v.iter().map(|x| x.to_raw()).collect()) {
            out.push((group.to_string(), label, v));
        }
    };
    add("base", "base".into(), base.to_vec(), &mut out);
    let sets = placements(n, &iamax_anchors(n));
    for (label, set) in &sets {
        let mut v = base.to_vec();
        for &p in set {
            v[p - 1] = T::nan();
        }
        add("g1", format!("nan@{label}"), v.clone(), &mut out);
        for (how, w) in inf_variants(&v) {
            add("g2", format!("nan@{label}/{how}"), w, &mut out);
        }
    }
    for (label, set) in &sets {
        let mut v = base.to_vec();
        for &p in set {
            v[p - 1] = alt(p, T::infinity());
        }
        add("g3", format!("inf@{label}"), v, &mut out);
    }
    out
}

fn iamax_base<T: Real>(n: usize) -> Vec<T> {
    (1..=n).map(|k| alt(k, T::from_usize(k).expect("small integer"))).collect()
}

/// IAMAX catalog for real vectors of length `n ≥ 1`.
///
/// Base `A(k) = (-1)^k·k`; group 1 places NaNs, group 2 adds Inf to each
/// group-1 vector seven ways, group 3 places `(-1)^k·Inf` only. Expected
/// indices follow the first-NaN / first-Inf / first-max rule.
pub fn gen_iamax_real_cases<T: Real>(n: usize) -> Vec<TestCase<T>> {
    assert!(n >= 1, "catalog needs n >= 1");
    iamax_real_vectors(n, &iamax_base::<T>(n))
        .into_iter()
        .map(|(group, label, v)| TestCase {
            id: format!("{}/IAMAX_R/n={n}/{group}/{label}", tag::<T>()),
            routine: Routine::IamaxR,
            group,
            n,
            expected: Expected::Index(three_tier(&v)),
            input: CaseInput::Real(v),
            skip: None,
        })
        .collect()
}

/// The four overflow-proxy patterns and their answers.
fn proxy_patterns<T: Real>(n: usize) -> Vec<(&'static str, Vec<Complex<T>>, usize)> {
    let ov = machine_params::<T>().ov;
    let f = |x: usize| T::from_usize(x).expect("small integer");
    let small = |k: usize| Complex::new(-f(k), f(k));
    let huge = |num: usize, den: usize| {
        let s = ov * (f(num) / f(den));
        Complex::new(s, s)
    };
    let last_odd = if n % 2 == 1 { n } else { n - 1 };
    let last_even = if n.is_multiple_of(2) { n } else { n - 1 };
    let a = (1..=n).map(|k| if k % 2 == 0 { small(k) } else { huge(k + 2, k + 3) }).collect();
    let b = (1..=n).map(|k| if k % 2 == 1 { small(k) } else { huge(k + 2, k + 3) }).collect();
    let c = (1..=n).map(|k| if k % 2 == 0 { small(k) } else { huge(n - k + 2, n - k + 3) }).collect();
    let d = (1..=n).map(|k| if k % 2 == 1 { small(k) } else { huge(n - k + 2, n - k + 3) }).collect();
    vec![("4A", a, last_odd), ("4B", b, last_even), ("4C", c, 1), ("4D", d, 2)]
}

/// IAMAX catalog for complex vectors of length `n ≥ 2` (`n = 1` gives
/// only the lifted real cases).
///
/// Contains every real case lifted to `x + 0i`, the patterns 4A–4D whose
/// `|re| + |im|` overflows, and each of 4A–4D with the real catalog's NaN
/// and Inf insertions (case 5).
pub fn gen_iamax_complex_cases<T: Real>(n: usize) -> Vec<TestCase<T>> {
    assert!(n >= 1, "catalog needs n >= 1");
    let p = tag::<T>();
    let mut out: Vec<TestCase<T>> = gen_iamax_real_cases::<T>(n)
        .into_iter()
        .map(|c| {
            let CaseInput::Real(v) = c.input else { unreachable!() };
            TestCase {
                id: c.id.replace("IAMAX_R", "IAMAX_C"),
                routine: Routine::IamaxC,
                input: CaseInput::Complex(v.into_iter().map(|x| Complex::new(x, T::zero())).collect()),
                ..c
            }
        })
        .collect();
    if n < 2 {
        return out;
    }
    for (name, pattern, answer) in proxy_patterns::<T>(n) {
        out.push(TestCase {
            id: format!("{p}/IAMAX_C/n={n}/{name}/plain"),
            routine: Routine::IamaxC,
            group: name.to_string(),
            n,
            input: CaseInput::Complex(pattern.clone()),
            expected: Expected::Index(answer),
            skip: None,
        });
        // case 5: insert NaN/Inf into the real parts, keeping the imaginary parts
        let sets = placements(n, &iamax_anchors(n));
        let mut seen = HashSet::new();
        let re: Vec<T> = pattern.iter().map(|z| z.re).collect();
        let mut variants: Vec<(String, Vec<T>)> = Vec::new();
        for (label, set) in &sets {
            let mut v = re.clone();
            for &q in set {
                v[q - 1] = T::nan();
            }
            variants.push((format!("nan@{label}"), v.clone()));
            for (how, w) in inf_variants(&v) {
                variants.push((format!("nan@{label}/{how}"), w));
            }
        }
        for (label, set) in &sets {
            let mut v = re.clone();
            for &q in set {
                v[q - 1] = alt(q, T::infinity());
            }
            variants.push((format!("inf@{label}"), v));
        }
        for (label, v) in variants {
            let z: Vec<Complex<T>> = v.iter().zip(&pattern).map(|(&r, w)| Complex::new(r, w.im)).collect();
            if !seen.insert(z.iter().map(|c| (c.re.to_raw(), c.im.to_raw())).collect::<Vec<_>>()) {
                continue;
            }
            let expected = exceptional_tier(&z).expect("every case-5 vector holds an Inf or NaN");
            out.push(TestCase {
                id: format!("{p}/IAMAX_C/n={n}/5{}/{label}", &name[1..]),
                routine: Routine::IamaxC,
                group: format!("5{}", &name[1..]),
                n,
                input: CaseInput::Complex(z),
                expected: Expected::Index(expected),
                skip: None,
            });
        }
    }
    out
}

/// Whether gradual underflow works in `T` on this host.
pub fn subnormals_supported<T: Real>() -> bool {
    let tiny = std::hint::black_box(T::from_raw(1));
    tiny != T::zero() && std::hint::black_box(tiny + tiny) > tiny
}

/// `|x|·sqrt(count)` computed in binary64 then rounded once into `T`.
fn scaled_sqrt<T: Real>(x: T, count: f64) -> f64 {
    let v = x.abs().to_f64_lossless() * count.sqrt();
    T::from_f64_lossy(v).to_f64_lossless()
}

struct Nrm2Base<T> {
    name: &'static str,
    v: Vec<T>,
    expected: Expected,
    skip: Option<String>,
}

fn nrm2_bases<T: Real>(n: usize) -> Vec<Nrm2Base<T>> {
    let p = machine_params::<T>();
    let nf = n as f64;
    let f = |x: f64| T::from_f64_lossy(x);
    let two = f(2.0);
    let alt_vec = |x: T| (1..=n).map(|k| alt(k, x)).collect::<Vec<T>>();
    let uniform = |name, x: T, skip: Option<String>| Nrm2Base {
        name,
        v: alt_vec(x),
        expected: Expected::Value(scaled_sqrt(x, nf)),
        skip,
    };
    // b for even k, -7b for odd k: sum of squares is 25n·x² (n even) or (25n + 24)·x² (n odd)
    let mixed = |name, x: T| {
        let v: Vec<T> = (1..=n).map(|k| if k % 2 == 0 { x } else { -(f(7.0) * x) }).collect();
        let count = if n.is_multiple_of(2) { 25.0 * nf } else { 25.0 * nf + 24.0 };
        Nrm2Base { name, v, expected: Expected::Value(scaled_sqrt(x, count)), skip: None }
    };
    let sub = T::from_raw(1);
    let mut out = vec![
        uniform("a", p.blue_min / two, None),
        uniform("b", p.un, None),
        uniform(
            "c",
            sub,
            (!subnormals_supported::<T>()).then(|| "subnormals flush to zero on this platform".to_string()),
        ),
        uniform("d", two * p.blue_min / f(nf), (n < 2).then(|| "needs n > 1".to_string())),
        uniform("e", two * p.blue_max, None),
        mixed("f", p.blue_min),
        mixed("g", p.blue_max),
    ];
    let h = (p.ov / f(nf).sqrt()) * two;
    out.push(Nrm2Base {
        name: "h",
        v: alt_vec(h),
        expected: Expected::PosInf,
        skip: (n < 4).then(|| "entries 2·OV/sqrt(n) are not finite for n < 4".to_string()),
    });
    // harmless pattern (-1)^k·k, sum of squares n(n+1)(2n+1)/6
    let harmless: Vec<T> = iamax_base(n);
    let ssq = nf * (nf + 1.0) * (2.0 * nf + 1.0) / 6.0;
    out.push(Nrm2Base {
        name: "i",
        v: harmless,
        expected: Expected::Value(T::from_f64_lossy(ssq.sqrt()).to_f64_lossless()),
        skip: None,
    });
    out
}

/// NRM2 catalog for real vectors of length `n ≥ 1`.
///
/// Group 1 holds the finite closed-form cases (a)–(h) plus the harmless
/// pattern (i); group 2 places `(-1)^k·Inf` on each of them (expects
/// `+Inf`); group 3 places NaNs on each, with and without the seven Inf
/// insertions, plus all-NaN (expects NaN). Case (d) uses `2b/n` entries.
pub fn gen_nrm2_cases<T: Real>(n: usize) -> Vec<TestCase<T>> {
    assert!(n >= 1, "catalog needs n >= 1");
    let p = tag::<T>();
    let sets = placements(n, &nrm2_anchors(n));
    let mut out = Vec::new();
    let mut seen: HashSet<(String, Vec<u64>)> = HashSet::new();
    let mut push = |group: &str, label: String, v: Vec<T>, expected: Expected, skip: Option<String>, out: &mut Vec<TestCase<T>>| {
        if !seen.insert((group.to_string(), v.iter().map(|x| x.to_raw()).collect())) {
            return;
        }
        out.push(TestCase {
            id: format!("{p}/NRM2_R/n={n}/{group}/{label}"),
            routine: Routine::Nrm2R,
            group: group.to_string(),
            n,
            input: CaseInput::Real(v),
            expected,
            skip,
        });
    };
    for base in nrm2_bases::<T>(n) {
        push("g1", base.name.to_string(), base.v.clone(), base.expected.clone(), base.skip.clone(), &mut out);
        if base.skip.is_some() {
            continue;
        }
        for (label, set) in &sets {
            let mut v = base.v.clone();
            for &q in set {
                v[q - 1] = alt(q, T::infinity());
            }
            push("g2", format!("{}/inf@{label}", base.name), v, Expected::PosInf, None, &mut out);
        }
        for (label, set) in &sets {
            let mut v = base.v.clone();
            for &q in set {
                v[q - 1] = T::nan();
            }
            push("g3", format!("{}/nan@{label}", base.name), v.clone(), Expected::NaN, None, &mut out);
            for (how, w) in inf_variants(&v) {
                push("g3", format!("{}/nan@{label}/{how}", base.name), w, Expected::NaN, None, &mut out);
            }
        }
    }
    out
}

/// [`gen_nrm2_cases`] lifted to complex vectors, each entry `x + 0i`.
pub fn gen_nrm2_complex_cases<T: Real>(n: usize) -> Vec<TestCase<T>> {
    gen_nrm2_cases::<T>(n)
        .into_iter()
        .map(|c| {
            let CaseInput::Real(v) = c.input else { unreachable!() };
            TestCase {
                id: c.id.replace("NRM2_R", "NRM2_C"),
                routine: Routine::Nrm2C,
                input: CaseInput::Complex(v.into_iter().map(|x| Complex::new(x, T::zero())).collect()),
                ..c
            }
        })
        .collect()
}
