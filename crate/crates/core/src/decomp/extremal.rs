use rayon::prelude::*;
use serde::Serialize;

use super::{pi3_alpha, DEFAULT_NODE_BUDGET};
use crate::constructions::{extremal_family_alpha, ExtremalPrediction};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, enumerate_unlabeled, CanonicalForm, MAX_ENUM_ORDER};
use crate::rational::{int, Rational};

/// Exhaustive maximum of `pi3_alpha` over all graphs of one small order,
/// next to the large-order prediction for comparison.
#[derive(Clone, Debug, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    #[serde(serialize_with = "crate::rational::serde_display")]
    pub alpha: Rational,
    pub graphs_examined: usize,
    #[serde(serialize_with = "crate::rational::serde_display")]
    pub max_cost: Rational,
    /// All maximisers, sorted by canonical form.
    pub maximizers: Vec<CanonicalForm>,
    /// Large-order prediction; only claimed for orders beyond an unspecified threshold.
    pub prediction: ExtremalPrediction,
    /// Cost of the predicted family evaluated exactly at this order.
    #[serde(serialize_with = "crate::rational::serde_display")]
    pub predicted_cost: Rational,
    /// Whether the small-order truth matches the prediction in value and in extremal set.
    pub agrees_with_prediction: bool,
}

pub fn brute_force_extremal(n: usize, alpha: &Rational) -> Result<ExtremalReport> {
    if !(1..=MAX_ENUM_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange { n, min: 1, max: MAX_ENUM_ORDER });
    }
    let graphs = enumerate_unlabeled(n)?;
    let costs: Vec<(CanonicalForm, Rational)> = graphs
        .par_iter()
        .map(|g| Ok((canonical_form(g)?, super::pi3_alpha_with_budget(g, alpha, DEFAULT_NODE_BUDGET)?.0)))
        .collect::<Result<_>>()?;
    let max_cost = costs.iter().map(|(_, c)| c.clone()).max().unwrap_or_else(|| int(0));
    let mut maximizers: Vec<CanonicalForm> = costs.iter().filter(|(_, c)| *c == max_cost).map(|(cf, _)| *cf).collect();
    maximizers.sort();

    let prediction = extremal_family_alpha(n, alpha);
    let mut predicted: Vec<(CanonicalForm, Rational)> = Vec::new();
    for g in prediction.graphs()? {
        predicted.push((canonical_form(&g)?, pi3_alpha(&g, alpha)?.0));
    }
    let predicted_cost = predicted.iter().map(|(_, c)| c.clone()).max().unwrap_or_else(|| int(0));
    let mut predicted_set: Vec<CanonicalForm> = predicted.iter().map(|(cf, _)| *cf).collect();
    predicted_set.sort();
    predicted_set.dedup();
    let agrees_with_prediction = predicted_cost == max_cost
        && predicted.iter().all(|(_, c)| *c == max_cost)
        && predicted_set == maximizers;

    Ok(ExtremalReport {
        n,
        alpha: alpha.clone(),
        graphs_examined: graphs.len(),
        max_cost,
        maximizers,
        prediction,
        predicted_cost,
        agrees_with_prediction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named, NamedKind};

    #[test]
    fn small_orders_at_alpha_three() {
        let three = int(3);
        let r = brute_force_extremal(3, &three).unwrap();
        assert_eq!(r.graphs_examined, 4);
        // Path costs 4, triangle 3.
        assert_eq!(r.max_cost, int(4));

        let r = brute_force_extremal(4, &three).unwrap();
        assert_eq!(r.max_cost, int(9));
        let k4 = canonical_form(&make_named(NamedKind::Complete, 4, None).unwrap()).unwrap();
        assert!(r.maximizers.contains(&k4));

        let r = brute_force_extremal(5, &three).unwrap();
        assert_eq!(r.graphs_examined, 34);
        assert_eq!(r.max_cost, int(14));
        let k5 = canonical_form(&make_named(NamedKind::Complete, 5, None).unwrap()).unwrap();
        assert!(r.maximizers.contains(&k5));
        assert_eq!(r.predicted_cost, int(12));
        assert!(!r.agrees_with_prediction);
    }

    #[test]
    fn out_of_range() {
        assert!(brute_force_extremal(0, &int(3)).is_err());
        assert!(brute_force_extremal(8, &int(3)).is_err());
    }
}
