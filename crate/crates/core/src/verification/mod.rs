//! The claim registry: every structural statement about the semiband embeddings as an
//! executable check over one semigroup, plus the order bounds for depth-2 embeddings.

mod bounds;
mod checks;
mod context;
mod mutation;
mod sampling;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::semigroup::FiniteSemigroup;
use crate::verdict::{Failure, Verdict, Witness};

pub use bounds::{bound_report, check_bounds, BoundReport};
pub use checks::{check_green_formulas, check_r_construction, check_restriction, check_t_construction};
pub use context::Member;
pub use mutation::{mutate_cell, run_mutation_trials, MutatedConstruction, MutationTrial};
pub use sampling::{sample_regular_subsemigroup, SAMPLES_PER_MEMBER};

macro_rules! claims {
    ($($variant:ident => $name:literal, $statement:literal;)*) => {
        /// One checkable statement.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum ClaimId {
            $(#[serde(rename = $name)] $variant,)*
        }

        impl ClaimId {
            pub const ALL: &'static [ClaimId] = &[$(ClaimId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(ClaimId::$variant => $name,)*
                }
            }

            /// The statement the checker decides.
            pub fn statement(self) -> &'static str {
                match self {
                    $(ClaimId::$variant => $statement,)*
                }
            }
        }
    };
}

claims! {
    ETr2Lemma => "E_TR2_Lemma", "E(T*R₂) = {(s,e,σ), (e,s,τ) : e ∈ E(S), se = s}";
    TsIdempotents => "TS_Idempotents", "E(T(S)) = {(s,e,σ) : se = s} ∪ {(e,s,τ) : e L s}, e ∈ E(S)";
    TsSemiband4 => "TS_Semiband4", "T(S) = {(s,t,α) : s ∈ S¹t} is a semiband of depth at most 4";
    PhiEmbeds => "Phi_Embeds", "S embeds into T(S), T*(S), F(S), A(S) and ΦS";
    FsOrders => "FS_Orders", "F(S) has order 2n² (monoid) or F(S)∖{1̄} has order 2n²+4n+1, and F(S) ≅ ΦS";
    TsIsoAs => "TS_iso_AS", "ψ: T(S¹) → A(S) is an isomorphism with inverse (a,t,·)ρ ↦ (at,t,·)";
    A1Subsemigroup => "A1_Subsemigroup", "for non-monoid S ∈ 𝓘, A₁ is a subsemigroup of A(S) isomorphic to T(S)";
    PreserveFinPerReg => "Preserve_FinPerReg", "S is finite, periodic or regular iff T(S) is";
    PreGreenLemma => "PreGreen_Lemma", "(s,t,τ) R (s,t,σ); L forces equal flags; L agrees across flags";
    GreenFormulas => "Green_Formulas", "closed forms of R, L, H, D, J and ≤ on T(S)";
    OrderFormula => "Order_Formula", "cardinalities of T*R₂, T(S), R(S), L(S), T*(S) and R*(S)";
    RestrictionCorollary => "Restriction_Corollary", "K^{T(S)} restricted to Sφ is K^{Sφ}; H_a^{T(S)} = H_a^{Sφ}";
    SubgroupIso => "Subgroup_Iso", "H_e ≅ H_t (σ) or H_s (τ) by projection";
    LocalMonoidIso => "LocalMonoid_Iso", "eT(S)e ≅ tSt (σ) or sSs (τ) by projection";
    LocallyV => "LocallyV", "S ∈ LV iff T(S) ∈ LV";
    SimpleFamily => "Simple_Family", "simple, bisimple, completely simple, semisimple, completely semisimple, cryptic transfer to T(S)";
    Kernel0bar => "Kernel_0bar", "0̄ is the kernel of T(S) and S embeds into T*(S)";
    ZeroSimpleFamily => "ZeroSimple_Family", "0-simple, 0-bisimple, completely 0-simple transfer to T*(S)";
    RsSemiband2 => "RS_Semiband2", "R(S) and L(S) are regular semibands of depth at most 2";
    RegularSubRestriction => "RegularSub_Restriction", "K^{T(S)} ∩ R = K^R and ≤^{T(S)} ∩ R = ≤^R for regular R ⊇ Sφ";
    RsPreservations => "RS_Preservations", "R(S) preserves the properties T(S) preserves";
    RStarZeroSimple => "RStar_ZeroSimple", "0-simple, 0-bisimple, completely 0-simple transfer to R*(S)";
    CompletelyRegularRs => "CompletelyRegular_RS", "S is completely regular iff R(S) is";
    PastijnA1Cr => "Pastijn_A1_CR", "for completely regular monoids, A₁ ≅ R(S) with ψ₁ψ⁻¹ = φ";
    HigginsIso => "Higgins_Iso", "R(𝒯_X) ≅ T ⊆ 𝒯_Y by (λ,μ,α) ↦ δ̄";
    SigmaRegBound => "Sigma_Reg_Bound", "|R(S)| ≤ 2nl ≤ 2n² and |L(S)| ≤ 2nr";
    SigmaNmBound => "Sigma_nm_Bound", "min(|R(S)|, |L(S)|)² ≤ 4n³m";
}

impl ClaimId {
    /// Claims checked once per run rather than per semigroup.
    pub fn is_global(self) -> bool {
        self == ClaimId::HigginsIso
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown claim `{0}`")]
pub struct UnknownClaim(pub String);

impl FromStr for ClaimId {
    type Err = UnknownClaim;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        ClaimId::ALL
            .iter()
            .copied()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownClaim(s.to_string()))
    }
}

/// Result of one checker on one semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// Passed on every sampled instance of a universally quantified statement.
    PassSampled,
    Fail(Failure),
    /// A precondition of the claim does not hold.
    Skipped(String),
}

impl From<Verdict> for Outcome {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Holds => Outcome::Pass,
            Verdict::Fails(f) => Outcome::Fail(f),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClaimVerdict {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "pass (sampled)")]
    PassSampled,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "skipped")]
    Skipped,
}

impl ClaimVerdict {
    pub fn passed(self) -> bool {
        matches!(self, ClaimVerdict::Pass | ClaimVerdict::PassSampled)
    }
}

impl fmt::Display for ClaimVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimVerdict::Pass => "pass",
            ClaimVerdict::PassSampled => "pass (sampled)",
            ClaimVerdict::Fail => "fail",
            ClaimVerdict::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub member: String,
    pub claim: ClaimId,
    pub verdict: ClaimVerdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    /// Failure reason or unmet precondition.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    pub millis: u64,
}

/// A named semigroup to verify.
#[derive(Debug, Clone)]
pub struct Target {
    pub name: String,
    pub semigroup: FiniteSemigroup,
}

impl Target {
    pub fn new(name: impl Into<String>, semigroup: FiniteSemigroup) -> Self {
        Target {
            name: name.into(),
            semigroup,
        }
    }

    /// Named by its table, rows separated by `/`.
    pub fn from_table(semigroup: FiniteSemigroup) -> Self {
        Target::new(table_name(&semigroup), semigroup)
    }
}

pub fn table_name(s: &FiniteSemigroup) -> String {
    let sep = if s.order() <= 10 { "" } else { "," };
    s.rows()
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep))
        .collect::<Vec<_>>()
        .join("/")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub record_timing: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            record_timing: true,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub entries: Vec<ReportEntry>,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| e.verdict == ClaimVerdict::Fail)
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn count(&self, verdict: ClaimVerdict) -> usize {
        self.entries.iter().filter(|e| e.verdict == verdict).count()
    }

    /// Requested claims that no member exercised with its preconditions met.
    pub fn uncovered(&self, claims: &[ClaimId]) -> Vec<ClaimId> {
        claims
            .iter()
            .copied()
            .filter(|&c| !self.entries.iter().any(|e| e.claim == c && e.verdict.passed()))
            .collect()
    }

    /// Per-claim pass, fail and skip counts in claim order.
    pub fn summary(&self) -> Vec<(ClaimId, usize, usize, usize)> {
        let mut claims: Vec<ClaimId> = self.entries.iter().map(|e| e.claim).collect();
        claims.sort();
        claims.dedup();
        claims
            .into_iter()
            .map(|c| {
                let of = |pred: fn(ClaimVerdict) -> bool| {
                    self.entries.iter().filter(|e| e.claim == c && pred(e.verdict)).count()
                };
                (
                    c,
                    of(ClaimVerdict::passed),
                    of(|v| v == ClaimVerdict::Fail),
                    of(|v| v == ClaimVerdict::Skipped),
                )
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.entries).expect("report entries serialise")
    }
}

fn entry(member: &str, claim: ClaimId, outcome: Outcome, millis: u64) -> ReportEntry {
    let (verdict, witness, reason) = match outcome {
        Outcome::Pass => (ClaimVerdict::Pass, None, None),
        Outcome::PassSampled => (ClaimVerdict::PassSampled, None, None),
        Outcome::Fail(f) => (ClaimVerdict::Fail, Some(f.witness), Some(f.reason)),
        Outcome::Skipped(why) => (ClaimVerdict::Skipped, None, Some(why)),
    };
    ReportEntry {
        member: member.to_string(),
        claim,
        verdict,
        witness,
        reason,
        millis,
    }
}

fn timed(opts: &VerifyOptions, f: impl FnOnce() -> Result<Outcome>) -> Result<(Outcome, u64)> {
    let start = Instant::now();
    let outcome = f()?;
    let millis = if opts.record_timing {
        start.elapsed().as_millis() as u64
    } else {
        0
    };
    Ok((outcome, millis))
}

/// Runs one per-member claim.
pub fn check_claim(member: &Member<'_>, claim: ClaimId) -> Result<Outcome> {
    checks::dispatch(member, claim)
}

/// Runs `claims` on every target. Targets are processed in parallel on the current
/// rayon pool; entries come back in target order, then claim order, with global
/// claims last.
pub fn verify_claims(targets: &[Target], claims: &[ClaimId], opts: &VerifyOptions) -> Result<VerificationReport> {
    let mut claims: Vec<ClaimId> = claims.to_vec();
    claims.sort();
    claims.dedup();
    let per_member: Vec<ClaimId> = claims.iter().copied().filter(|c| !c.is_global()).collect();
    let mut blocks: Vec<(usize, Vec<ReportEntry>)> = targets
        .par_iter()
        .enumerate()
        .map(|(i, target)| {
            let member = Member::new(&target.semigroup, opts.seed);
            let entries = per_member
                .iter()
                .map(|&c| {
                    let (outcome, millis) = timed(opts, || checks::dispatch(&member, c))?;
                    Ok(entry(&target.name, c, outcome, millis))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((i, entries))
        })
        .collect::<Result<Vec<_>>>()?;
    blocks.sort_by_key(|(i, _)| *i);
    let mut entries: Vec<ReportEntry> = blocks.into_iter().flat_map(|(_, e)| e).collect();
    if claims.contains(&ClaimId::HigginsIso) {
        for k in checks::HIGGINS_DEGREES {
            let (outcome, millis) = timed(opts, || checks::higgins_iso(k))?;
            entries.push(entry(&format!("higgins-k{k}"), ClaimId::HigginsIso, outcome, millis));
        }
    }
    Ok(VerificationReport { entries })
}

/// Verifies a single semigroup under the given name.
pub fn verify_semigroup(
    name: &str,
    s: &FiniteSemigroup,
    claims: &[ClaimId],
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    verify_claims(&[Target::new(name, s.clone())], claims, opts)
}
