//! p-adic partial zeta functions and p-adic q-l-functions.
//!
//! Every series here has the shape
//!
//! `P(a) ⟨a⟩^{-s} Σ_j C(-s, j) c_j(a) ω_j`, with
//! `c_j(a) = q^{ja} ([F]_q/[a]_q)^j E_{j,q^F}`,
//!
//! where `P(a)` and the weights `ω_j` are exact rationals. Since `p | F`
//! and `q ≡ 1 (mod p)`, `v_p([F]_q) >= 1`, so `v_p(c_j) >= j` and the sum is
//! truncated at `j = N` with the result certified modulo `p^{N+1}`. All
//! rational parts are computed exactly and embedded; only `C(-s, j)`,
//! `⟨a⟩^{-s}` and character values are genuinely p-adic.

mod theorem5;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::characters::DirichletCharacter;
use crate::error::{domain, Error, Result};
use crate::numerics::{
    padic_power, rational_valuation, sign, teichmuller, GeneralizedBinomial, PadicNumber, Rational,
};
use crate::qeuler::{PadicQContext, QArg, QContext};
use crate::zeta_arch::partial_zeta_negative;

pub use theorem5::{remark_a_sides, Theorem5Form};

/// A p-adic q-context together with the modulus `F` of the residue classes.
#[derive(Debug, Clone)]
pub struct PadicZeta {
    ctx: PadicQContext,
    work: PadicQContext,
    f: u64,
}

/// Digits carried beyond the working precision to absorb division by `j!`
/// and cancellation.
fn guard_digits(p: u64, n: u32) -> u32 {
    6 + (n + 1) / (p as u32 - 1)
}

impl PadicZeta {
    /// `F` must be an odd multiple of `p`.
    pub fn new(ctx: PadicQContext, f: u64) -> Result<Self> {
        let p = ctx.prime();
        if f == 0 || f.is_multiple_of(2) || !f.is_multiple_of(p) {
            return domain(format!("F = {f} must be an odd multiple of p = {p}"));
        }
        let work = ctx.with_digits(ctx.digits() + guard_digits(p, ctx.digits()));
        Ok(Self { ctx, work, f })
    }

    /// `F = lcm(p, f_χ)`, the smallest modulus on which `χ` and the residue
    /// classes prime to `p` are both defined.
    pub fn for_character(ctx: PadicQContext, chi: &DirichletCharacter) -> Result<Self> {
        let f = ctx.prime().lcm(&chi.modulus());
        Self::new(ctx, f)
    }

    pub fn context(&self) -> &PadicQContext {
        &self.ctx
    }

    pub fn modulus(&self) -> u64 {
        self.f
    }

    pub fn prime(&self) -> u64 {
        self.ctx.prime()
    }

    /// The working precision `N`.
    pub fn precision(&self) -> u32 {
        self.ctx.digits()
    }

    /// Series are certified modulo `p^{N+1}`.
    pub fn certified(&self) -> i64 {
        self.precision() as i64 + 1
    }

    pub(crate) fn exact(&self) -> &QContext<Rational> {
        self.ctx.exact()
    }

    pub(crate) fn embed(&self, r: &Rational) -> PadicNumber {
        self.work.embed(r)
    }

    /// An integer as a p-adic number at the internal precision.
    pub fn integer(&self, n: i64) -> PadicNumber {
        self.embed(&Rational::from_integer(n.into()))
    }

    /// A rational exponent `s ∈ Z_(p)` as an element of `Z_p`.
    pub fn exponent(&self, s: &Rational) -> Result<PadicNumber> {
        if matches!(rational_valuation(s, self.prime()), Some(v) if v < 0) {
            return domain(format!("s = {s} is not in Z_{}", self.prime()));
        }
        Ok(self.embed(s))
    }

    fn cap(&self, x: PadicNumber) -> PadicNumber {
        x.cap(self.certified())
    }

    fn qi(&self, x: i64) -> Result<Rational> {
        self.exact().q_int(x)
    }

    fn qpow(&self, x: i64) -> Result<Rational> {
        self.exact().base(1).pow(x)
    }

    fn unit_residue(&self, a: i64) -> Result<()> {
        if a <= 0 || a >= self.f as i64 || a % self.prime() as i64 == 0 {
            return domain(format!(
                "residue a = {a} must satisfy 0 < a < F = {} and p ∤ a",
                self.f
            ));
        }
        Ok(())
    }

    /// `w(a)` at the internal precision.
    pub fn teichmuller(&self, a: i64) -> Result<PadicNumber> {
        teichmuller(a, self.prime(), self.work.digits())
    }

    /// `⟨a⟩ = [a]_q / w(a)`, a unit congruent to 1 modulo `p`.
    pub fn angle(&self, a: i64) -> Result<PadicNumber> {
        self.embed(&self.qi(a)?).checked_div(&self.teichmuller(a)?)
    }

    /// `⟨a⟩^{-s}`.
    pub fn angle_power(&self, a: i64, s: &PadicNumber) -> Result<PadicNumber> {
        padic_power(&self.angle(a)?, &-s)
    }

    /// `C(-s, j)` for `j = 0..=N`.
    pub(crate) fn binomials(&self, s: &PadicNumber) -> Result<Vec<PadicNumber>> {
        let minus_s = -s;
        (0..=self.precision() as u64)
            .map(|j| minus_s.generalized_binomial(j))
            .collect()
    }

    /// `c_j(a) = q^{ja} ([F]_q/[a]_q)^j E_{j,q^F}`.
    pub(crate) fn coefficient(&self, a: i64, j: u64) -> Result<Rational> {
        let ratio = self.qi(self.f as i64)? / self.qi(a)?;
        let e = self.exact().base(self.f).q_euler_number(j)?;
        if matches!(rational_valuation(&e, self.prime()), Some(v) if v < 0) {
            return Err(Error::Domain(format!(
                "E_{{{j},q^{}}} is not {}-integral",
                self.f,
                self.prime()
            )));
        }
        Ok(self.qpow(a * j as i64)? * num_traits::pow(ratio, j as usize) * e)
    }

    /// `(-1)^a q^a / [2]_{q^F}`.
    pub(crate) fn prefactor(&self, a: i64) -> Result<Rational> {
        Ok(sign(a.unsigned_abs()) * self.qpow(a)? / self.exact().base(self.f).q_int(2)?)
    }

    /// `⟨a⟩^{-s} Σ_{j<=N} C(-s,j) c_j(a) ω_j`, without the prefactor.
    pub(crate) fn weighted_series(
        &self,
        s: &PadicNumber,
        binoms: &[PadicNumber],
        a: i64,
        weight: impl Fn(u64) -> Result<Rational>,
    ) -> Result<PadicNumber> {
        let mut acc = PadicNumber::zero(self.prime());
        for (j, b) in binoms.iter().enumerate() {
            let c = self.coefficient(a, j as u64)? * weight(j as u64)?;
            if c.is_zero() {
                continue;
            }
            acc = acc + b * &self.embed(&c);
        }
        Ok(self.cap(&self.angle_power(a, s)? * &acc))
    }

    /// `H_{p,q}(s, a : F) = ((-1)^a q^a/[2]_{q^F}) ⟨a⟩^{-s} Σ_j C(-s,j) c_j(a)`.
    pub fn partial_zeta(&self, s: &PadicNumber, a: i64) -> Result<PadicNumber> {
        self.unit_residue(a)?;
        let binoms = self.binomials(s)?;
        self.partial_zeta_with(s, &binoms, a)
    }

    pub(crate) fn partial_zeta_with(
        &self,
        s: &PadicNumber,
        binoms: &[PadicNumber],
        a: i64,
    ) -> Result<PadicNumber> {
        let series = self.weighted_series(s, binoms, a, |_| Ok(Rational::one()))?;
        Ok(self.cap(&self.embed(&self.prefactor(a)?) * &series))
    }

    /// `χ(0..F)` in `Z_p`; the modulus of `χ` must divide `F`.
    pub fn character_values(&self, chi: &DirichletCharacter) -> Result<Vec<PadicNumber>> {
        if !self.f.is_multiple_of(chi.modulus()) {
            return domain(format!(
                "character modulus {} does not divide F = {}",
                chi.modulus(),
                self.f
            ));
        }
        chi.lift_to(self.f)?
            .values_padic(self.prime(), self.work.digits())
    }

    /// `l_{p,q}(s, χ) = [2]_q Σ_{0<a<F, p∤a} χ(a) H_{p,q}(s, a : F)`.
    pub fn padic_l(&self, s: &PadicNumber, chi: &DirichletCharacter) -> Result<PadicNumber> {
        let values = self.character_values(chi)?;
        let binoms = self.binomials(s)?;
        let mut acc = PadicNumber::zero(self.prime());
        for a in 1..self.f as i64 {
            let c = &values[a as usize];
            if a % self.prime() as i64 == 0 || c.is_zero() {
                continue;
            }
            acc = acc + c * &self.partial_zeta_with(s, &binoms, a)?;
        }
        Ok(self.cap(&self.embed(&self.qi(2)?) * &acc))
    }

    /// `w^{-n}(a) H_q(-n, a : F)` from the exact negative-integer value.
    pub fn partial_zeta_oracle(&self, n: u64, a: i64) -> Result<PadicNumber> {
        self.unit_residue(a)?;
        let exact = partial_zeta_negative(n, a, self.f, self.exact())?;
        Ok(&self.teichmuller(a)?.pow(-(n as i64))? * &self.embed(&exact))
    }

    /// `E_{n,ψ,Q}` for `Q = q^e` and an odd-modulus character `ψ` with
    /// p-adic values:
    /// `([2]_Q/[2]_{Q^f}) [f]_Q^n Σ_a ψ(a) (-1)^a Q^a E_{n,Q^f}(a/f)`.
    pub fn generalized_euler(
        &self,
        n: u64,
        psi: &DirichletCharacter,
        e: u64,
    ) -> Result<PadicNumber> {
        let f = psi.modulus();
        if f.is_multiple_of(2) {
            return domain(format!(
                "generalized q-Euler numbers need an odd modulus, got {f}"
            ));
        }
        let values = psi.values_padic(self.prime(), self.work.digits())?;
        let base = self.exact().base(e);
        let mut acc = PadicNumber::zero(self.prime());
        for (a, c) in values.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let a = a as i64;
            let term = sign(a as u64)
                * base.pow(a)?
                * base.q_euler_polynomial(n, QArg { num: a, den: f })?;
            acc = acc + c * &self.embed(&term);
        }
        let scale = base.q_int(2)? / base.lift(f).q_int(2)?
            * num_traits::pow(base.q_int(f as i64)?, n as usize);
        Ok(&self.embed(&scale) * &acc)
    }

    /// `E_{n,ψ,q} - ρ [p]_q^n ψ(p) E_{n,ψ,q^p}` where `ρ = [2]_q/[2]_{q^p}`
    /// when `with_ratio` is set and `ρ = 1` otherwise.
    pub fn euler_factor_removed(
        &self,
        n: u64,
        psi: &DirichletCharacter,
        with_ratio: bool,
    ) -> Result<PadicNumber> {
        let p = self.prime();
        let main = self.generalized_euler(n, psi, 1)?;
        let psi_p = match psi.exponent(p as i64) {
            None => return Ok(main),
            Some(_) => {
                psi.values_padic(p, self.work.digits())?[(p % psi.modulus()) as usize].clone()
            }
        };
        let mut factor = num_traits::pow(self.qi(p as i64)?, n as usize);
        if with_ratio {
            factor *= self.qi(2)? / self.exact().base(p).q_int(2)?;
        }
        let lifted = self.generalized_euler(n, psi, p)?;
        Ok(main - &(&(&self.embed(&factor) * &psi_p) * &lifted))
    }

    /// `E_{n,q} - ρ [p]_q^n E_{n,q^p}`, exactly, with `ρ` as in
    /// [`PadicZeta::euler_factor_removed`].
    pub fn trivial_euler_factor_removed(&self, n: u64, with_ratio: bool) -> Result<Rational> {
        let p = self.prime();
        let mut factor = num_traits::pow(self.qi(p as i64)?, n as usize);
        if with_ratio {
            factor *= self.qi(2)? / self.exact().base(p).q_int(2)?;
        }
        Ok(self.exact().q_euler_number(n)? - factor * self.exact().base(p).q_euler_number(n)?)
    }
}
