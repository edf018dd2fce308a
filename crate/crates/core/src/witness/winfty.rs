//! The directive of a word whose factor differences run through `Z^3`.
//!
//! Stage `k` appends `sigma_1 sigma_2 sigma_3` to the current prefix, giving
//! `q`, conjugates the `k`-th target through `q` and appends the host
//! composition lifted from a path to the conjugated target. The difference
//! realized after `q` maps back to the target through `M_q`.
//!
//! Conjugated targets grow exponentially with `|q|` and path lengths grow
//! quadratically with the target, so only the first few stages are
//! computable; a stage whose path would exceed `max_path_edges` fails with
//! [`Error::BudgetExceeded`].

use num_bigint::BigInt;
use serde::Serialize;

use crate::abelian::AbelianVector;
use crate::directive::Directive;
use crate::error::{Error, Result};
use crate::graph::{accessibility_path, path_length_lower_bound, Path};
use crate::matrix::incidence_of;
use crate::serde_big;
use crate::standard::standard_prefix;
use crate::substitution::apply_ar;
use crate::word::{find_factor, Letter, Word};

use super::conjugate::conjugate_target;
use super::enumerate::enumerate_z3;
use super::lift::{lift_path_to_factors, lifted_directive, Mode, DEFAULT_CAP};

#[derive(Debug, Clone)]
pub struct WinftyOptions {
    /// Largest prefix materialized to confirm a witness by substring search.
    pub cap: usize,
    /// Largest accepted difference-graph path per stage.
    pub max_path_edges: usize,
    /// Targets realized after the enumerated ones.
    pub inject: Vec<AbelianVector>,
}

impl Default for WinftyOptions {
    fn default() -> Self {
        WinftyOptions { cap: DEFAULT_CAP, max_path_edges: 100_000, inject: Vec::new() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StageRecord {
    pub stage: usize,
    pub target: AbelianVector,
    /// Length of the prefix `q` the target is conjugated through.
    pub prefix_length: usize,
    pub conjugated: AbelianVector,
    pub path: Path,
    pub lifted: Directive,
    /// `(ab(u) - ab(v)) * M_q` from the symbolic lift.
    pub realized: AbelianVector,
    pub mode: Mode,
    /// Length of the prefix of the final word holding the witness.
    #[serde(serialize_with = "serde_big::serialize_int")]
    pub host_length: BigInt,
    /// Positions of `q(u)` and `q(v)` in that prefix, in explicit mode.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub positions: Option<[usize; 2]>,
    pub verified: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct WinftyReport {
    pub directive: Directive,
    pub stages: Vec<StageRecord>,
}

impl WinftyReport {
    pub fn occurrences(&self) -> [usize; 3] {
        let mut c = [0; 3];
        for l in self.directive.indices() {
            c[l.index()] += 1;
        }
        c
    }

    pub fn all_verified(&self) -> bool {
        self.stages.iter().all(|s| s.verified)
    }

    /// A prefix of the standard word, continuing the directive periodically.
    pub fn generated_prefix(&self, len: usize) -> Result<Word> {
        standard_prefix(&self.directive.as_periodic()?, len)
    }
}

/// `phi(0), ..., phi(k-1)` followed by the injected targets.
pub fn shell_targets(k: usize, inject: &[AbelianVector]) -> Vec<AbelianVector> {
    (0..k as u64).map(enumerate_z3).chain(inject.iter().cloned()).collect()
}

const BLOCK: [Letter; 3] = [Letter::ONE, Letter::TWO, Letter::THREE];

fn apply_composition(p: &[Letter], u: &Word) -> Word {
    let mut w = u.clone();
    for &s in p.iter().rev() {
        w = apply_ar(s, &w);
    }
    w
}

struct Pending {
    record: StageRecord,
    q: Vec<Letter>,
    words: Option<(Word, Word)>,
}

/// Builds the directive realizing `phi(0), ..., phi(k-1)` and the injected
/// targets, ending with a closing `sigma_1 sigma_2 sigma_3` block.
pub fn build_winfty_directive(k: usize, opts: &WinftyOptions) -> Result<WinftyReport> {
    if k == 0 {
        return Err(Error::InvalidInput("at least one target is needed".into()));
    }
    let mut directive: Vec<Letter> = Vec::new();
    let mut pending = Vec::new();

    for (stage, target) in shell_targets(k, &opts.inject).into_iter().enumerate() {
        let mut q = directive.clone();
        if stage > 0 {
            q.extend(BLOCK);
        }
        let conjugated = conjugate_target(&q, &target);
        let estimate = path_length_lower_bound(&conjugated.sup_norm());
        if estimate > BigInt::from(opts.max_path_edges) {
            return Err(Error::BudgetExceeded {
                stage,
                sup_norm: conjugated.sup_norm().to_string(),
                estimated_edges: estimate.to_string(),
                limit: opts.max_path_edges,
            });
        }
        let path = accessibility_path(&conjugated)?;
        let witness = lift_path_to_factors(&path, opts.cap)?;
        let realized = witness.difference().mul_matrix(&incidence_of(&q));
        let lifted = lifted_directive(&path);
        directive = q.clone();
        directive.extend(&lifted);

        let words = match (&witness.u, &witness.v) {
            (super::FactorRecord::Explicit(u), super::FactorRecord::Explicit(v)) => Some((u.clone(), v.clone())),
            _ => None,
        };
        let record = StageRecord {
            stage,
            verified: realized == target,
            target,
            prefix_length: q.len(),
            conjugated,
            path,
            lifted: Directive::finite(lifted),
            realized,
            mode: Mode::Symbolic,
            host_length: BigInt::from(0),
            positions: None,
        };
        pending.push(Pending { record, q, words });
    }
    directive.extend(BLOCK);
    let directive = Directive::finite(directive);

    // Stage k's witness lives in p_k(1), a prefix of the final word since the
    // letter following p_k in the directive is sigma_1.
    let mut stages = Vec::with_capacity(pending.len());
    for p in &mut pending {
        let pk = &directive.indices()[..p.q.len() + p.record.lifted.indices().len()];
        p.record.host_length = AbelianVector::unit(Letter::ONE).mul_matrix(&incidence_of(pk)).sum();
    }
    let needed = pending
        .iter()
        .filter(|p| p.words.is_some() && p.record.host_length <= BigInt::from(opts.cap))
        .map(|p| p.record.host_length.clone())
        .max();
    let host = match needed {
        Some(n) => Some(standard_prefix(&directive.as_periodic()?, n.try_into().expect("under cap"))?),
        None => None,
    };
    for mut p in pending {
        if let (Some(host), Some((u, v))) = (&host, &p.words) {
            if p.record.host_length <= BigInt::from(host.len()) {
                let len: usize = (&p.record.host_length).try_into().expect("under cap");
                let hw = host.prefix(len);
                let qu = apply_composition(&p.q, u);
                let qv = apply_composition(&p.q, v);
                let pu = find_factor(&qu, &hw).map(|v| v[0]);
                let pv = find_factor(&qv, &hw).map(|v| v[0]);
                if let (Some(pu), Some(pv)) = (pu, pv) {
                    p.record.mode = Mode::Explicit;
                    p.record.positions = Some([pu, pv]);
                    p.record.verified &= &qu.abelianize() - &qv.abelianize() == p.record.target;
                } else {
                    p.record.verified = false;
                }
            }
        }
        stages.push(p.record);
    }
    Ok(WinftyReport { directive, stages })
}
