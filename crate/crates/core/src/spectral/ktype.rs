use std::fmt;

use serde::{Deserialize, Serialize};

use super::GrassmannSignature;
use crate::error::{Error, Result};

/// Spherical highest weight `μ = (m_1, …, m_p)`: even entries, weakly
/// decreasing and nonnegative, except that for `K = ℝ`, `p = q` the last entry
/// may be negative as long as `m_{p−1} ≥ |m_p|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct KType(Vec<i64>);

impl KType {
    /// Wraps the entries without checking them against a signature.
    pub fn new(m: Vec<i64>) -> Self {
        KType(m)
    }

    pub fn trivial(p: usize) -> Self {
        KType(vec![0; p])
    }

    /// `(2, 0, …, 0)`, the type spanned by the degree-two zonal functions.
    pub fn first_step(p: usize) -> Self {
        let mut m = vec![0; p];
        m[0] = 2;
        KType(m)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|&m| m == 0)
    }

    /// `|μ| = Σ m_j` with signs as written.
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `Σ |m_j|`, the degree used to bound enumerations.
    pub fn abs_degree(&self) -> i64 {
        self.0.iter().map(|m| m.abs()).sum()
    }

    /// `μ + 2·sign·ε_j` (0-based `j`).
    pub fn step(&self, j: usize, sign: i64) -> KType {
        let mut m = self.0.clone();
        m[j] += 2 * sign;
        KType(m)
    }

    pub fn is_in_lattice(&self, sig: &GrassmannSignature) -> bool {
        let m = &self.0;
        let p = sig.p() as usize;
        if m.len() != p || m.iter().any(|x| x.rem_euclid(2) != 0) {
            return false;
        }
        if m.windows(2).take(p.saturating_sub(2)).any(|w| w[0] < w[1]) {
            return false;
        }
        let last = m[p - 1];
        if sig.allows_signed_last() {
            p == 1 || m[p - 2] >= last.abs()
        } else {
            last >= 0 && (p == 1 || m[p - 2] >= last)
        }
    }

    pub fn validate(&self, sig: &GrassmannSignature) -> Result<()> {
        if self.is_in_lattice(sig) {
            Ok(())
        } else {
            Err(Error::InvalidKType { mu: self.0.clone(), reason: format!("not a spherical highest weight for {sig}") })
        }
    }
}

impl fmt::Display for KType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|m| m.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All K-types with `Σ|m_j| ≤ max_degree`, in descending lexicographic order.
pub fn enumerate_ktypes(sig: &GrassmannSignature, max_degree: u32) -> Vec<KType> {
    let p = sig.p() as usize;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(p);
    fill(sig, p, max_degree as i64, i64::MAX, &mut cur, &mut out);
    out
}

fn fill(sig: &GrassmannSignature, p: usize, budget: i64, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<KType>) {
    let j = cur.len();
    if j == p {
        out.push(KType(cur.clone()));
        return;
    }
    let hi = budget.min(cap);
    let hi = hi - hi.rem_euclid(2);
    let lo = if j == p - 1 && sig.allows_signed_last() { -hi } else { 0 };
    let mut m = hi;
    while m >= lo {
        cur.push(m);
        fill(sig, p, budget - m.abs(), m, cur, out);
        cur.pop();
        m -= 2;
    }
}

/// `S(μ) = {μ ± 2ε_j} ∩ Λ⁺`: the up-steps in order of `j`, then the
/// down-steps.
pub fn neighbors(sig: &GrassmannSignature, mu: &KType) -> Result<Vec<KType>> {
    mu.validate(sig)?;
    let p = sig.p() as usize;
    let mut out = Vec::new();
    for sign in [1, -1] {
        for j in 0..p {
            let s = mu.step(j, sign);
            if s.is_in_lattice(sig) && !out.contains(&s) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::FieldTag;

    fn k(m: &[i64]) -> KType {
        KType::new(m.to_vec())
    }

    #[test]
    fn small_enumerations() {
        let generic = GrassmannSignature::new(4, 2, FieldTag::Complex).unwrap();
        assert_eq!(enumerate_ktypes(&generic, 0), vec![k(&[0, 0])]);
        assert_eq!(enumerate_ktypes(&generic, 2), vec![k(&[2, 0]), k(&[0, 0])]);
        assert_eq!(enumerate_ktypes(&generic, 4), vec![k(&[4, 0]), k(&[2, 2]), k(&[2, 0]), k(&[0, 0])]);
    }

    #[test]
    fn real_square_case_has_signed_last_entry() {
        let sig = GrassmannSignature::new(3, 2, FieldTag::Real).unwrap();
        let all = enumerate_ktypes(&sig, 4);
        assert!(all.contains(&k(&[2, -2])));
        assert_eq!(all, vec![k(&[4, 0]), k(&[2, 2]), k(&[2, 0]), k(&[2, -2]), k(&[0, 0])]);
        // Gr_1(R^2): characters of SO(2) of both signs
        let circle = GrassmannSignature::new(1, 1, FieldTag::Real).unwrap();
        assert_eq!(enumerate_ktypes(&circle, 2), vec![k(&[2]), k(&[0]), k(&[-2])]);
    }

    #[test]
    fn neighbor_examples() {
        let generic = GrassmannSignature::new(4, 2, FieldTag::Real).unwrap();
        assert_eq!(neighbors(&generic, &k(&[0, 0])).unwrap(), vec![k(&[2, 0])]);
        assert_eq!(neighbors(&generic, &k(&[2, 0])).unwrap(), vec![k(&[4, 0]), k(&[2, 2]), k(&[0, 0])]);
    }

    /// Brute force: every `μ ± 2ε_j` filtered by an independent dominance test.
    fn brute_neighbors(sig: &GrassmannSignature, mu: &[i64]) -> Vec<Vec<i64>> {
        let p = mu.len();
        let dominant = |v: &[i64]| -> bool {
            let signed = sig.field() == FieldTag::Real && sig.is_square();
            let even = v.iter().all(|x| x % 2 == 0);
            let chain = (0..p.saturating_sub(2)).all(|i| v[i] >= v[i + 1]);
            let tail = if p == 1 {
                signed || v[0] >= 0
            } else if signed {
                v[p - 2] >= v[p - 1].abs()
            } else {
                v[p - 2] >= v[p - 1] && v[p - 1] >= 0
            };
            even && chain && tail
        };
        let mut out = Vec::new();
        for delta in [2, -2] {
            for j in 0..p {
                let mut v = mu.to_vec();
                v[j] += delta;
                if dominant(&v) {
                    out.push(v);
                }
            }
        }
        out
    }

    #[test]
    fn neighbors_of_22_in_real_square_case() {
        let sig = GrassmannSignature::new(3, 2, FieldTag::Real).unwrap();
        let got = neighbors(&sig, &k(&[2, 2])).unwrap();
        assert_eq!(got, vec![k(&[4, 2]), k(&[2, 0])]);
        assert!(!got.contains(&k(&[2, -2])));
        let brute: Vec<KType> = brute_neighbors(&sig, &[2, 2]).into_iter().map(KType::new).collect();
        assert_eq!(got, brute);
    }

    #[test]
    fn neighbors_match_brute_force_everywhere() {
        for sig in GrassmannSignature::all_up_to(6) {
            for mu in enumerate_ktypes(&sig, 8) {
                let got = neighbors(&sig, &mu).unwrap();
                let brute: Vec<KType> = brute_neighbors(&sig, mu.entries()).into_iter().map(KType::new).collect();
                assert_eq!(got, brute, "{sig} {mu}");
            }
        }
    }

    #[test]
    fn validation() {
        let sig = GrassmannSignature::new(5, 3, FieldTag::Quaternion).unwrap();
        assert!(k(&[4, 2, 2]).validate(&sig).is_ok());
        assert!(k(&[2, 4, 0]).validate(&sig).is_err());
        assert!(k(&[3, 1, 0]).validate(&sig).is_err());
        assert!(k(&[2, 2, -2]).validate(&sig).is_err());
        assert!(k(&[2, 2]).validate(&sig).is_err());
    }
}
