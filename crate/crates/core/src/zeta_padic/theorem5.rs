//! Correction terms and the power-sum expansion for `F = p`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::PadicZeta;
use crate::characters::DirichletCharacter;
use crate::error::{domain, Error, Result};
use crate::numerics::{
    binomial, generalized_binomial, int, rational_valuation, sign, PadicNumber, Rational,
};
use crate::qeuler::QContext;

/// Which arrangement of the expansion of the power sum to evaluate.
///
/// Write `β_k = (r/(r+k)) C(-r-1,k) (-1)^n q^{pn} [pn]_q^k` and
/// `Λ_k = l_{p,q}(r+k, χ_k) + K_{p,q}(r+k, χ_k)` with `χ_k = w^{-r-k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "form")]
pub enum Theorem5Form {
    /// `-Σ_{k>=0} β_k Λ_k - T_{p,q}(r, χ_0)` with `χ_k = w^{shift-r-k}`.
    Literal { shift: i64 },
    /// `-Σ_{k>=1} β_k Λ_k - T_{p,q}(r, χ_0)/[2]_{q^p}`.
    CorrectedFromOne,
    /// `-Σ_{k>=0} β_k Λ_k + l_{p,q}(r, χ_0)`.
    CorrectedLeading,
    /// `-Σ_{k>=0} β_k l_{p,q}(r+k, χ_k)`, the shape displayed for `q = 1`.
    Corollary,
}

impl Theorem5Form {
    pub fn label(&self) -> String {
        match self {
            Self::Literal { shift: 0 } => "literal".into(),
            Self::Literal { shift } => format!("literal_shift_{shift}"),
            Self::CorrectedFromOne => "corrected_from_one".into(),
            Self::CorrectedLeading => "corrected_leading".into(),
            Self::Corollary => "corollary".into(),
        }
    }
}

/// Exact sides of `Σ_{j<p} (-1)^j q^j/[j]_q = Σ_{j<p} (-1)^j/[j]_q`, with
/// the termwise identity `(-1)^j q^j/[j]_q = (-1)^j (1/[j]_q - (1-q))`
/// checked along the way.
pub fn remark_a_sides(p: u64, q: &Rational) -> Result<(Rational, Rational, bool)> {
    if p < 3 || p.is_multiple_of(2) {
        return domain(format!("p = {p} must be odd and at least 3"));
    }
    let ctx = QContext::rational(q.clone())?;
    let mut lhs = Rational::zero();
    let mut rhs = Rational::zero();
    let mut termwise = true;
    for j in 1..p as i64 {
        let s = sign(j as u64);
        let qj = ctx.q_int(j)?;
        let left = &s * ctx.base(1).pow(j)? / &qj;
        let reduced = &s * (qj.recip() - (Rational::one() - q));
        termwise &= left == reduced;
        lhs += left;
        rhs += s / qj;
    }
    Ok((lhs, rhs, termwise))
}

impl PadicZeta {
    fn require_prime_modulus(&self) -> Result<()> {
        if self.modulus() != self.prime() {
            return domain(format!(
                "the power-sum expansion needs F = p, got F = {}",
                self.modulus()
            ));
        }
        Ok(())
    }

    /// `T_{n,q}(s, a : F) = (-1)^a q^a ⟨a⟩^{-s} Σ_k C(-s,k) c_k(a) ((-1)^n q^{nF(k+1)} - 1)`.
    pub fn t_euler(&self, n: u64, s: &PadicNumber, a: i64) -> Result<PadicNumber> {
        self.unit_residue(a)?;
        let binoms = self.binomials(s)?;
        self.t_euler_with(n, s, &binoms, a)
    }

    fn t_euler_with(
        &self,
        n: u64,
        s: &PadicNumber,
        binoms: &[PadicNumber],
        a: i64,
    ) -> Result<PadicNumber> {
        let f = self.modulus() as i64;
        let series = self.weighted_series(s, binoms, a, |k| {
            Ok(sign(n) * self.qpow(n as i64 * f * (k as i64 + 1))? - Rational::one())
        })?;
        let pre = sign(a as u64) * self.qpow(a)?;
        Ok(self.cap(&self.embed(&pre) * &series))
    }

    /// `J^{(k)}_{p,q}(s, a : F) = Σ_{j=1}^k w^j(a) C(k,j) (q-1)^j ⟨a⟩^j H_{p,q}(s, a : F)`.
    pub fn j_correction(&self, k: u64, s: &PadicNumber, a: i64) -> Result<PadicNumber> {
        let h = self.partial_zeta(s, a)?;
        self.j_correction_from(k, a, &h)
    }

    fn j_correction_from(&self, k: u64, a: i64, h: &PadicNumber) -> Result<PadicNumber> {
        let x = &self.teichmuller(a)? * &self.angle(a)?;
        let qm1 = self.embed(&(self.exact_q() - Rational::one()));
        let step = &x * &qm1;
        let mut pow = step.clone();
        let mut acc = PadicNumber::zero(self.prime());
        for j in 1..=k {
            let c = self.embed(&Rational::from_integer(binomial(k, j)));
            acc = acc + &c * &pow;
            pow = &pow * &step;
        }
        Ok(self.cap(&acc * h))
    }

    fn exact_q(&self) -> Rational {
        self.context().q().clone()
    }

    /// `K_{p,q}(s, a : F)`: the series of `H_{p,q}` with weights
    /// `q^{nFl} - 1 = Σ_{j=1}^l C(l,j) [nF]_q^j (q-1)^j`.
    pub fn k_correction(&self, n: u64, s: &PadicNumber, a: i64) -> Result<PadicNumber> {
        self.unit_residue(a)?;
        let binoms = self.binomials(s)?;
        self.k_correction_with(n, s, &binoms, a)
    }

    fn k_correction_with(
        &self,
        n: u64,
        s: &PadicNumber,
        binoms: &[PadicNumber],
        a: i64,
    ) -> Result<PadicNumber> {
        let nf = self.qi(n as i64 * self.modulus() as i64)?;
        let qm1 = self.exact_q() - Rational::one();
        let series = self.weighted_series(s, binoms, a, |l| {
            let mut w = Rational::zero();
            for j in 1..=l {
                w += Rational::from_integer(binomial(l, j))
                    * num_traits::pow(&nf * &qm1, j as usize);
            }
            Ok(w)
        })?;
        Ok(self.cap(&self.embed(&self.prefactor(a)?) * &series))
    }

    /// The `q^{nFl}`-weighted series, i.e. `H_{p,q} + K_{p,q}` computed in one
    /// pass.
    pub fn k_full_series(&self, n: u64, s: &PadicNumber, a: i64) -> Result<PadicNumber> {
        self.unit_residue(a)?;
        let binoms = self.binomials(s)?;
        let nf = n as i64 * self.modulus() as i64;
        let series = self.weighted_series(s, &binoms, a, |l| self.qpow(nf * l as i64))?;
        Ok(self.cap(&self.embed(&self.prefactor(a)?) * &series))
    }

    fn residues(&self) -> impl Iterator<Item = i64> {
        let p = self.prime() as i64;
        (1..p).filter(move |a| a % p != 0)
    }

    /// `[2]_q Σ_{a=1}^{p-1} χ(a) (J^{(k)}(s,a) + q^{ak} K(s,a))`.
    pub fn k_aggregate(
        &self,
        k: u64,
        n: u64,
        s: &PadicNumber,
        chi: &DirichletCharacter,
    ) -> Result<PadicNumber> {
        self.require_prime_modulus()?;
        let values = self.character_values(chi)?;
        let binoms = self.binomials(s)?;
        let mut acc = PadicNumber::zero(self.prime());
        for a in self.residues() {
            let h = self.partial_zeta_with(s, &binoms, a)?;
            let j = self.j_correction_from(k, a, &h)?;
            let kk = self.k_correction_with(n, s, &binoms, a)?;
            let qak = self.embed(&self.qpow(a * k as i64)?);
            acc = acc + &values[a as usize] * &(j + &qak * &kk);
        }
        Ok(self.cap(&self.embed(&self.qi(2)?) * &acc))
    }

    /// `T_{p,q}(s, χ) = [2]_q Σ_{a=1}^{p-1} χ(a) T_{n,q}(s, a : p)`.
    pub fn t_aggregate(
        &self,
        n: u64,
        s: &PadicNumber,
        chi: &DirichletCharacter,
    ) -> Result<PadicNumber> {
        self.require_prime_modulus()?;
        let values = self.character_values(chi)?;
        let binoms = self.binomials(s)?;
        let mut acc = PadicNumber::zero(self.prime());
        for a in self.residues() {
            acc = acc + &values[a as usize] * &self.t_euler_with(n, s, &binoms, a)?;
        }
        Ok(self.cap(&self.embed(&self.qi(2)?) * &acc))
    }

    /// `[2]_q Σ_{j<=np, p∤j} (-1)^j q^j / [j]_q^r`, exactly.
    pub fn theorem5_lhs_exact(&self, n: u64, r: u64) -> Result<Rational> {
        let p = self.prime() as i64;
        let mut acc = Rational::zero();
        for j in 1..=(n as i64 * p) {
            if j % p == 0 {
                continue;
            }
            acc += sign(j as u64) * self.qpow(j)? / num_traits::pow(self.qi(j)?, r as usize);
        }
        Ok(self.qi(2)? * acc)
    }

    pub fn theorem5_lhs(&self, n: u64, r: u64) -> Result<PadicNumber> {
        Ok(self.embed(&self.theorem5_lhs_exact(n, r)?))
    }

    /// The same power sum regrouped by residue class:
    /// `[2]_q Σ_{a<p} Σ_{l<n} (-1)^{a+pl} q^{a+pl} / [a+pl]_q^r`.
    /// With `with_q = false` the factor `q^{a+pl}` is dropped.
    pub fn residue_regrouped_exact(&self, n: u64, r: u64, with_q: bool) -> Result<Rational> {
        let p = self.prime() as i64;
        let mut acc = Rational::zero();
        for a in 1..p {
            for l in 0..n as i64 {
                let m = a + p * l;
                let weight = if with_q {
                    self.qpow(m)?
                } else {
                    Rational::one()
                };
                acc += sign(m as u64) * weight / num_traits::pow(self.qi(m)?, r as usize);
            }
        }
        Ok(self.qi(2)? * acc)
    }

    /// `Σ_{l<n} (-1)^{Fl+a} q^{Fl+a} / [Fl+a]_q^r`, exactly.
    pub fn eq24_lhs(&self, n: u64, r: u64, a: i64) -> Result<Rational> {
        self.unit_residue(a)?;
        let f = self.modulus() as i64;
        let mut acc = Rational::zero();
        for l in 0..n as i64 {
            let m = f * l + a;
            acc += sign(m as u64) * self.qpow(m)? / num_traits::pow(self.qi(m)?, r as usize);
        }
        Ok(acc)
    }

    /// The terms `s = 0..=N` of the expansion of [`PadicZeta::eq24_lhs`], each
    /// an exact rational with `v_p >= s`.
    pub fn eq24_terms(&self, n: u64, r: u64, a: i64) -> Result<Vec<Rational>> {
        self.unit_residue(a)?;
        let f = self.modulus();
        let big = self.exact().base(f);
        let big_q = big.q()?;
        let n_big = big.q_int(n as i64)?;
        let two_big = big.q_int(2)?;
        let ratio = self.qi(f as i64)? / self.qi(a)?;
        let base = sign(a as u64) * self.qpow(a)? * self.qi(a)?.pow(-(r as i32));
        let lead = sign(n) * num_traits::pow(big_q.clone(), n as usize) / &two_big;
        let minus_r = int(-(r as i64));
        let mut out = Vec::new();
        for s in 0..=self.precision() as u64 {
            let pre = &base
                * num_traits::pow(ratio.clone(), s as usize)
                * self.qpow(a * s as i64)?
                * generalized_binomial(&minus_r, s)?;
            let mut inner = Rational::zero();
            for l in 0..s {
                inner += Rational::from_integer(binomial(s, l))
                    * self.qpow((n * f * l) as i64)?
                    * big.q_euler_number(l)?
                    * num_traits::pow(n_big.clone(), (s - l) as usize);
            }
            let closing = (sign(n) * big.pow(((s + 1) * n) as i64)? - Rational::one()) / &two_big
                * big.q_euler_number(s)?;
            out.push(-(pre * (&lead * inner + closing)));
        }
        Ok(out)
    }

    /// Sum of [`PadicZeta::eq24_terms`], certified modulo `p^{N+1}`.
    pub fn eq24_rhs(&self, n: u64, r: u64, a: i64) -> Result<PadicNumber> {
        let terms = self.eq24_terms(n, r, a)?;
        for (s, t) in terms.iter().enumerate() {
            if matches!(rational_valuation(t, self.prime()), Some(v) if v < s as i64) {
                return Err(Error::Precision(format!(
                    "term {s} of the residue expansion has valuation below {s}"
                )));
            }
        }
        let sum: Rational = terms.into_iter().sum();
        Ok(self.cap(self.embed(&sum)))
    }

    /// `[2]_q Σ_{a=1}^{p-1} eq24_rhs(n, r, a)`.
    pub fn reconstruction(&self, n: u64, r: u64) -> Result<PadicNumber> {
        self.require_prime_modulus()?;
        let mut acc = PadicNumber::zero(self.prime());
        for a in self.residues() {
            acc = acc + self.eq24_rhs(n, r, a)?;
        }
        Ok(self.cap(&self.embed(&self.qi(2)?) * &acc))
    }

    /// `β_k = (r/(r+k)) C(-r-1,k) (-1)^n q^{pn} [pn]_q^k`, exactly.
    pub fn beta(&self, n: u64, r: u64, k: u64) -> Result<Rational> {
        let pn = (self.prime() * n) as i64;
        Ok(
            Rational::new(int(r as i64).to_integer(), int((r + k) as i64).to_integer())
                * generalized_binomial(&int(-(r as i64) - 1), k)?
                * sign(n)
                * self.qpow(pn)?
                * num_traits::pow(self.qi(pn)?, k as usize),
        )
    }

    /// Lower bound for `v_p(β_k)` over the omitted indices `k > N`.
    fn outer_certificate(&self, r: u64) -> i64 {
        let p = self.prime();
        let vr = rational_valuation(&int(r as i64), p).unwrap_or(0);
        let n = self.precision() as u64;
        (n + 1..=n + 64)
            .map(|k| k as i64 + vr - rational_valuation(&int((r + k) as i64), p).unwrap_or(0))
            .min()
            .unwrap_or(i64::MAX)
    }

    /// Terms `β_k Λ_k` (or `β_k l_{p,q}` for [`Theorem5Form::Corollary`])
    /// for `k = 0..=N`.
    pub fn theorem5_terms(
        &self,
        n: u64,
        r: u64,
        shift: i64,
        with_k: bool,
    ) -> Result<Vec<PadicNumber>> {
        self.require_prime_modulus()?;
        let p = self.prime();
        let mut out = Vec::new();
        for k in 0..=self.precision() as u64 {
            let beta = self.beta(n, r, k)?;
            if beta.is_zero() {
                out.push(PadicNumber::zero(p));
                continue;
            }
            let s = self.integer((r + k) as i64);
            let chi = DirichletCharacter::teichmuller_power(shift - (r + k) as i64, p)?;
            let mut lam = self.padic_l(&s, &chi)?;
            if with_k {
                lam = lam + self.k_aggregate(k, n, &s, &chi)?;
            }
            out.push(&self.embed(&beta) * &lam);
        }
        Ok(out)
    }

    /// The expansion of [`PadicZeta::theorem5_lhs`] in the chosen form,
    /// capped by the truncation certificate of the outer series.
    pub fn theorem5_rhs(&self, n: u64, r: u64, form: Theorem5Form) -> Result<PadicNumber> {
        self.require_prime_modulus()?;
        let p = self.prime();
        let shift = match form {
            Theorem5Form::Literal { shift } => shift,
            _ => 0,
        };
        let with_k = form != Theorem5Form::Corollary;
        let terms = self.theorem5_terms(n, r, shift, with_k)?;
        let skip = usize::from(form == Theorem5Form::CorrectedFromOne);
        let mut acc = PadicNumber::zero(p);
        for t in &terms[skip..] {
            acc = acc - t;
        }
        let s = self.integer(r as i64);
        let chi0 = DirichletCharacter::teichmuller_power(shift - r as i64, p)?;
        acc = match form {
            Theorem5Form::Literal { .. } => acc - self.t_aggregate(n, &s, &chi0)?,
            Theorem5Form::CorrectedFromOne => {
                let t = self.t_aggregate(n, &s, &chi0)?;
                let two_pq = self.embed(&self.exact().base(p).q_int(2)?);
                acc - &t.checked_div(&two_pq)?
            }
            Theorem5Form::CorrectedLeading => acc + self.padic_l(&s, &chi0)?,
            Theorem5Form::Corollary => acc,
        };
        Ok(acc.cap(self.certified().min(self.outer_certificate(r))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;
    use crate::qeuler::PadicQContext;

    fn zeta(p: u64, n: u32, q: i64) -> PadicZeta {
        let ctx = if q == 1 {
            PadicQContext::classical(p, n).unwrap()
        } else {
            PadicQContext::new(p, n, int(q)).unwrap()
        };
        PadicZeta::new(ctx, p).unwrap()
    }

    #[test]
    fn lhs_reference_value() {
        let z = zeta(3, 8, 4);
        assert_eq!(z.theorem5_lhs_exact(1, 1).unwrap(), int(-4));
        assert_eq!(z.theorem5_lhs_exact(0, 3).unwrap(), int(0));
        assert_eq!(
            z.residue_regrouped_exact(2, 2, true).unwrap(),
            z.theorem5_lhs_exact(2, 2).unwrap()
        );
    }

    #[test]
    fn remark_a_values() {
        let (l, r, t) = remark_a_sides(3, &rat(1, 2)).unwrap();
        assert_eq!((l.clone(), r, t), (rat(-1, 3), rat(-1, 3), true));
        let (l, r, _) = remark_a_sides(3, &int(4)).unwrap();
        assert_eq!((l, r), (rat(-4, 5), rat(-4, 5)));
    }

    #[test]
    fn residue_expansion_terms_are_certified() {
        let z = zeta(3, 8, 4);
        for a in [1, 2] {
            let lhs = z.embed(&z.eq24_lhs(2, 1, a).unwrap());
            let rhs = z.eq24_rhs(2, 1, a).unwrap();
            assert!(lhs.agrees_to(&rhs, 6), "{:?}", lhs.agreement(&rhs));
        }
        assert!(z
            .eq24_rhs(0, 2, 1)
            .unwrap()
            .agrees_to(&PadicNumber::zero(3), 9));
    }

    #[test]
    fn reconstruction_and_corrected_forms() {
        for p in [3u64, 5] {
            let z = zeta(p, 8, 1 + p as i64);
            for (n, r) in [(1, 1), (2, 2)] {
                let lhs = z.theorem5_lhs(n, r).unwrap();
                assert!(z.reconstruction(n, r).unwrap().agrees_to(&lhs, 6));
                let c = z
                    .theorem5_rhs(n, r, Theorem5Form::CorrectedLeading)
                    .unwrap();
                assert!(
                    c.agrees_to(&lhs, 6),
                    "p={p} n={n} r={r}: {:?}",
                    c.agreement(&lhs)
                );
                let c = z
                    .theorem5_rhs(n, r, Theorem5Form::CorrectedFromOne)
                    .unwrap();
                assert!(
                    c.agrees_to(&lhs, 6),
                    "p={p} n={n} r={r}: {:?}",
                    c.agreement(&lhs)
                );
            }
        }
    }

    #[test]
    fn corrections_vanish_classically() {
        let z = zeta(5, 6, 1);
        let s = z.integer(3);
        assert!(z.j_correction(2, &s, 2).unwrap().is_zero());
        assert!(z.k_correction(1, &s, 2).unwrap().is_zero());
        assert!(z.t_euler(2, &s, 3).unwrap().is_zero());
    }

    #[test]
    fn correction_identities() {
        let z = zeta(3, 8, 4);
        let s = z.embed(&rat(2, 5));
        for a in [1, 2] {
            let h = z.partial_zeta(&s, a).unwrap();
            let j = z.j_correction(3, &s, a).unwrap();
            let qak = z.embed(&z.qpow(3 * a).unwrap());
            assert!((j + &h).agrees_to(&(&qak * &h), 8));
            let k = z.k_correction(2, &s, a).unwrap();
            assert!((k.clone() + &h).agrees_to(&z.k_full_series(2, &s, a).unwrap(), 8));
            assert!(k.valuation_bound().unwrap() >= 2);
        }
    }
}
