use std::collections::BTreeMap;
use std::fmt;

use super::checks::{CheckOutcome, Counterexample, PropertyId, Tables};
use crate::par::{self, Strategy};
use crate::KNomialParams;

/// What to verify and how.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Single-line checks run on lines `0 ..= n_max`.
    pub n_max: usize,
    /// The convolution identity runs over all line pairs up to `m_max`.
    pub m_max: usize,
    pub properties: Vec<PropertyId>,
    pub strategy: Strategy,
    /// Offsets the expected values of one property by one so that it fails.
    /// Used to exercise failure reporting end to end.
    pub perturb: Option<PropertyId>,
}

impl VerifyConfig {
    pub fn new(n_max: usize, m_max: usize) -> Self {
        Self {
            n_max,
            m_max,
            properties: PropertyId::ALL.to_vec(),
            strategy: Strategy::default(),
            perturb: None,
        }
    }

    pub fn strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn properties(mut self, properties: impl IntoIterator<Item = PropertyId>) -> Self {
        self.properties = properties.into_iter().collect();
        self.properties.sort();
        self.properties.dedup();
        self
    }

    pub fn perturb(mut self, property: Option<PropertyId>) -> Self {
        self.perturb = property;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(Counterexample),
}

impl Outcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, Outcome::Pass)
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match self {
            Outcome::Pass => None,
            Outcome::Fail(c) => Some(c),
        }
    }
}

/// Result of [`verify`]: one outcome per requested property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub k: usize,
    pub n_max: usize,
    pub m_max: usize,
    pub results: BTreeMap<PropertyId, Outcome>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.results.values().all(Outcome::is_pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = (PropertyId, &Counterexample)> {
        self.results
            .iter()
            .filter_map(|(id, o)| o.counterexample().map(|c| (*id, c)))
    }

    pub fn outcome(&self, property: PropertyId) -> Option<&Outcome> {
        self.results.get(&property)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "order k = {}, lines 0..={}, convolution lines 0..={}",
            self.k, self.n_max, self.m_max
        )?;
        for (id, outcome) in &self.results {
            let verdict = if outcome.is_pass() { "PASS" } else { "FAIL" };
            writeln!(f, "{:<12} {:<5} {}", id.as_str(), verdict, id.description())?;
            if let Outcome::Fail(c) = outcome {
                writeln!(f, "{:<12} counterexample: {c}", "")?;
            }
        }
        Ok(())
    }
}

/// Independent unit of work: one property on one line, or the convolution
/// identity on one pair of lines.
#[derive(Debug, Clone, Copy)]
enum Cell {
    Line(PropertyId, usize),
    Pair(usize, usize),
}

impl Cell {
    fn property(self) -> PropertyId {
        match self {
            Cell::Line(id, _) => id,
            Cell::Pair(..) => PropertyId::P8,
        }
    }
}

/// Runs every requested check and collects the first counterexample of each
/// failing property. Cells run concurrently under [`Strategy::Parallel`];
/// the report is identical for either strategy.
pub fn verify(params: &KNomialParams, config: &VerifyConfig) -> VerificationReport {
    let wants = |id| config.properties.contains(&id);

    let mut cells = Vec::new();
    for &id in config.properties.iter().filter(|&&id| id != PropertyId::P8) {
        cells.extend((0..=config.n_max).map(|n| Cell::Line(id, n)));
    }
    if wants(PropertyId::P8) {
        for n in 0..=config.m_max {
            cells.extend((0..=config.m_max).map(|m| Cell::Pair(n, m)));
        }
    }

    let mut row_max = config.n_max;
    if wants(PropertyId::P9) {
        row_max = row_max.max(2 * config.n_max);
    }
    if wants(PropertyId::P8) {
        row_max = row_max.max(2 * config.m_max);
    }
    let needs_oracle = [
        PropertyId::P1,
        PropertyId::P3,
        PropertyId::P5,
        PropertyId::Oracle,
    ]
    .into_iter()
    .any(wants);
    let oracle_max = if needs_oracle { config.n_max } else { 0 };
    let tables = Tables::new(*params, row_max, oracle_max).with_skew(config.perturb);

    let outcomes: Vec<(PropertyId, CheckOutcome)> = par::map(config.strategy, cells, |cell| {
        let outcome = match cell {
            Cell::Line(id, n) => tables.run(id, n),
            Cell::Pair(n, m) => tables.vandermonde_all(n, m),
        };
        (cell.property(), outcome)
    });

    let mut results: BTreeMap<PropertyId, Outcome> = config
        .properties
        .iter()
        .map(|&id| (id, Outcome::Pass))
        .collect();
    // Cells are in ascending order per property, so the first failure seen
    // is the one with the smallest line index.
    for (id, outcome) in outcomes {
        if let Err(c) = outcome {
            let slot = results.get_mut(&id).expect("cell property was requested");
            if slot.is_pass() {
                *slot = Outcome::Fail(c);
            }
        }
    }

    VerificationReport {
        k: params.k(),
        n_max: config.n_max,
        m_max: config.m_max,
        results,
    }
}

/// Every property on lines `0 ..= n_max`, convolution over line pairs up to
/// `m_max`, with the default strategy.
pub fn verify_all(params: &KNomialParams, n_max: usize, m_max: usize) -> VerificationReport {
    verify(params, &VerifyConfig::new(n_max, m_max))
}
