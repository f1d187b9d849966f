//! Runtime classification of the host's native complex arithmetic and
//! min/max, checked against this crate's safe reference routines.

use std::fmt;
use std::hint::black_box;

use num_complex::Complex;
use serde::Serialize;

use crate::numeric::{
    cmul_annexg, cmul_textbook, is_exceptional, is_exceptional_complex, machine_params, safe_cabs, safe_cdiv, Real,
};

/// Which reference the native complex product agrees with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MulSemantics {
    /// Four multiplies and two adds, nothing more.
    Textbook,
    /// C Annex G: infinite times nonzero stays infinite.
    CStandard,
    Other,
}

/// Outcome of [`run_probes`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub complex_abs_safe: bool,
    pub complex_div_safe: bool,
    pub complex_mul_semantics: MulSemantics,
    pub minmax_propagates_nan: bool,
    pub subnormals_supported: bool,
    pub notes: Vec<String>,
}

impl ProbeReport {
    /// Flat `key=value` lines, notes last.
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "complex_abs_safe={}\ncomplex_div_safe={}\ncomplex_mul_semantics={:?}\nminmax_propagates_nan={}\nsubnormals_supported={}\n",
            self.complex_abs_safe,
            self.complex_div_safe,
            self.complex_mul_semantics,
            self.minmax_propagates_nan,
            self.subnormals_supported
        );
        for n in &self.notes {
            s.push_str("notes=");
            s.push_str(n);
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

impl fmt::Display for ProbeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Fixed component values: zeros, ones, the extremes of the range, Inf, NaN.
fn components<T: Real>() -> Vec<T> {
    let p = machine_params::<T>();
    let two = T::one() + T::one();
    let half = T::one() / two;
    vec![
        T::zero(),
        T::one(),
        -T::one(),
        p.ov,
        p.ov * half,
        -(p.ov * half),
        p.un,
        p.un * two,
        p.un * half,
        p.eps,
        T::infinity(),
        T::neg_infinity(),
        T::nan(),
    ]
}

fn catalog<T: Real>() -> Vec<Complex<T>> {
    let c = components::<T>();
    // every (re, im) pair from a reduced set keeps the catalog small but covers mixed scales
    let mut out = Vec::new();
    for &re in &c {
        for &im in &[c[0], c[1], c[4], c[7], c[10], c[12]] {
            out.push(Complex::new(re, im));
        }
    }
    out
}

fn same_class<T: Real>(a: Complex<T>, b: Complex<T>) -> bool {
    let cls = |x: T| (x.is_nan(), x.is_infinite() && x > T::zero(), x.is_infinite() && x < T::zero());
    let eq = |x: T, y: T| if x.is_nan() || y.is_nan() { x.is_nan() && y.is_nan() } else { x == y || (cls(x) == cls(y) && x.is_infinite()) };
    eq(a.re, b.re) && eq(a.im, b.im)
}

struct Findings {
    abs_safe: bool,
    div_safe: bool,
    mul: MulSemantics,
    notes: Vec<String>,
}

fn probe_precision<T: Real>() -> Findings {
    let name = if T::PREFIX == 'S' { "binary32" } else { "binary64" };
    let cat = catalog::<T>();
    let mut notes = Vec::new();

    // abs: native must be exceptional exactly when the reference is, and must not flush to zero
    let mut abs_bad = None;
    for &z in &cat {
        let native = black_box(z).norm();
        let reference = safe_cabs(z);
        let ok = is_exceptional(native) == is_exceptional(reference)
            && (native.is_nan() == reference.is_nan())
            && !(native == T::zero() && reference != T::zero());
        if !ok && abs_bad.is_none() {
            abs_bad = Some(format!("{name}: native |{z:e}| = {native:e}, safe = {reference:e}"));
        }
    }
    notes.extend(abs_bad.clone());

    let mut div_bad = None;
    let mut mul_textbook = true;
    let mut mul_annexg = true;
    for &a in &cat {
        for &b in &cat {
            let reference = safe_cdiv(a, b);
            let native = black_box(a) / black_box(b);
            let spurious_zero = |n: T, r: T| n == T::zero() && r != T::zero() && !is_exceptional(r);
            let ok = is_exceptional_complex(native) == is_exceptional_complex(reference)
                && !spurious_zero(native.re, reference.re)
                && !spurious_zero(native.im, reference.im);
            if !ok && div_bad.is_none() {
                div_bad = Some(format!("{name}: native ({a:e})/({b:e}) = {native:e}, safe = {reference:e}"));
            }
            let prod = black_box(a) * black_box(b);
            mul_textbook &= same_class(prod, cmul_textbook(a, b));
            mul_annexg &= same_class(prod, cmul_annexg(a, b));
        }
    }
    notes.extend(div_bad.clone());
    let mul = match (mul_textbook, mul_annexg) {
        (true, _) => MulSemantics::Textbook,
        (false, true) => MulSemantics::CStandard,
        (false, false) => MulSemantics::Other,
    };
    Findings { abs_safe: abs_bad.is_none(), div_safe: div_bad.is_none(), mul, notes }
}

fn minmax_propagates<T: Real>() -> bool {
    let three = T::from_f64_lossy(3.0);
    let n = T::nan();
    let cases = [(three, n), (n, three)];
    cases.iter().all(|&(a, b)| black_box(a).max(black_box(b)).is_nan() && black_box(a).min(black_box(b)).is_nan())
}

fn subnormals<T: Real>() -> bool {
    let un = machine_params::<T>().un;
    let two = T::one() + T::one();
    let half = black_box(un) / black_box(two);
    half != T::zero() && half * two == un
}

/// Classify native complex abs, division, product and min/max in both precisions.
///
/// A precision-dependent answer is folded conservatively: a flag is true
/// only if it holds in both, and the product semantics is `Other` unless
/// both agree.
pub fn run_probes() -> ProbeReport {
    let d = probe_precision::<f64>();
    let s = probe_precision::<f32>();
    let mut notes = d.notes;
    notes.extend(s.notes);
    let mul = if d.mul == s.mul { d.mul } else { MulSemantics::Other };
    if d.mul != s.mul {
        notes.push(format!("complex product differs by precision: binary64 {:?}, binary32 {:?}", d.mul, s.mul));
    }
    let minmax = minmax_propagates::<f64>() && minmax_propagates::<f32>();
    if !minmax {
        notes.push("native max(3, NaN) discards the NaN".to_string());
    }
    let sub = subnormals::<f64>() && subnormals::<f32>();
    if !sub {
        notes.push("subnormal results flush to zero".to_string());
    }
    ProbeReport {
        complex_abs_safe: d.abs_safe && s.abs_safe,
        complex_div_safe: d.div_safe && s.div_safe,
        complex_mul_semantics: mul,
        minmax_propagates_nan: minmax,
        subnormals_supported: sub,
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        assert_eq!(run_probes(), run_probes());
    }

    #[test]
    fn host_expectations() {
        let r = run_probes();
        // num-complex's norm goes through hypot
        assert!(r.complex_abs_safe);
        // its division is the unscaled formula, which overflows on OV/2 operands
        assert!(!r.complex_div_safe);
        assert_eq!(r.complex_mul_semantics, MulSemantics::Textbook);
        // f64::max returns the non-NaN operand
        assert!(!r.minmax_propagates_nan);
        assert!(r.subnormals_supported);
        assert!(!r.notes.is_empty());
    }

    #[test]
    fn mul_reference_split() {
        let a = Complex::new(f64::INFINITY, 0.0);
        let b = Complex::new(f64::INFINITY, f64::INFINITY);
        let t = cmul_textbook(a, b);
        let g = cmul_annexg(a, b);
        assert!(t.re.is_nan());
        assert!(g.re.is_infinite() || g.im.is_infinite());
        assert!(!same_class(t, g));
    }

    #[test]
    fn json_has_the_six_keys() {
        let v: serde_json::Value = serde_json::from_str(&run_probes().to_json()).unwrap();
        let obj = v.as_object().unwrap();
        for k in [
            "complex_abs_safe",
            "complex_div_safe",
            "complex_mul_semantics",
            "minmax_propagates_nan",
            "subnormals_supported",
            "notes",
        ] {
            assert!(obj.contains_key(k), "{k}");
        }
        assert_eq!(obj.len(), 6);
    }

    #[test]
    fn text_is_key_value() {
        let t = run_probes().to_text();
        assert!(t.lines().all(|l| l.contains('=')));
        assert!(t.contains("minmax_propagates_nan=false"));
    }
}
