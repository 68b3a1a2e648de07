//! Point and space descriptions plus exact metric evaluation.
//!
//! Five constructions are supported: the 0-1 metric on a set of atoms, the
//! paired two-point metric with values {0,1,2}, the dyadic metric on the
//! naturals `d(n,k) = |2^-n - 2^-k|`, free sums of unit-bounded spaces with
//! cross-summand distance 2, and finitely many copies of the open interval
//! (0,2) re-metrized through an exact rational chart.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::report::{Outcome, QuantifierScope, VerificationReport};

/// A finite count or an unbounded (lazily represented) universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Extent {
    Finite(u64),
    Unbounded,
}

impl Extent {
    pub fn contains(&self, index: u64) -> bool {
        match self {
            Extent::Finite(n) => index < *n,
            Extent::Unbounded => true,
        }
    }

    /// Number of indices available below `bound`.
    pub fn capped(&self, bound: u64) -> u64 {
        match self {
            Extent::Finite(n) => (*n).min(bound),
            Extent::Unbounded => bound,
        }
    }
}

impl Serialize for Extent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Extent::Finite(n) => serializer.serialize_u64(*n),
            Extent::Unbounded => serializer.serialize_str("unbounded"),
        }
    }
}

impl<'de> Deserialize<'de> for Extent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let v = serde_json::Value::deserialize(deserializer)?;
        match v {
            serde_json::Value::Number(n) => n
                .as_u64()
                .map(Extent::Finite)
                .ok_or_else(|| D::Error::custom("extent must be a non-negative integer")),
            serde_json::Value::String(s) if s == "unbounded" => Ok(Extent::Unbounded),
            other => Err(D::Error::custom(format!(
                "extent must be an integer or \"unbounded\", got {other}"
            ))),
        }
    }
}

/// A point of one of the supported spaces.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Point {
    /// Point of a 0-1 metric space.
    Atom { index: u64 },
    /// Point x_pair^side of the paired two-point space.
    Paired { pair: u64, side: u8 },
    /// Natural number point, 1-based.
    Nat { n: u64 },
    /// Point of a free-sum summand.
    Summand { tag: u64, inner: Box<Point> },
    /// Point <x, copy> of an interval-copies space, 0 < x < 2.
    CopyPoint { copy: u64, x: Rat },
}

impl Point {
    pub fn atom(index: u64) -> Self {
        Point::Atom { index }
    }

    pub fn paired(pair: u64, side: u8) -> Self {
        Point::Paired { pair, side }
    }

    pub fn nat(n: u64) -> Self {
        Point::Nat { n }
    }

    pub fn summand(tag: u64, inner: Point) -> Self {
        Point::Summand {
            tag,
            inner: Box::new(inner),
        }
    }

    pub fn copy_point(copy: u64, x: Rat) -> Self {
        Point::CopyPoint { copy, x }
    }
}

/// One summand of a free sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SummandSpec {
    pub tag: u64,
    pub space: SpaceSpec,
}

/// Description of one of the supported metric spaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SpaceSpec {
    /// The 0-1 metric on a set of atoms.
    ZeroOne { size: Extent },
    /// Disjoint two-point pairs {x_a^0, x_a^1}: distance 2 inside a pair,
    /// 1 across pairs, 0 on the diagonal.
    PairedTwoPoint { pairs: Extent },
    /// The naturals with d(n,k) = |2^-n - 2^-k|.
    DyadicNat,
    /// Disjoint union re-metrized with cross-summand distance 2; every
    /// summand metric must take values inside [0,1].
    FreeSum { summands: Vec<SummandSpec> },
    /// `copies` disjoint copies of the interval (0,2) with the chart metric
    /// rho inside a copy and distance 2 across copies.
    IntervalCopies { copies: u64 },
}

/// Human-readable description of the fixed chart, recorded in certificates so
/// that distance values are reproducible.
pub const CHART_FORMULA: &str = "rho(x,y) = min(1, |f(x) - f(y)|) with f(x) = 1/(2-x) - 1/x on (0,2)";

/// The order isomorphism f(x) = 1/(2-x) - 1/x from (0,2) onto the rationals.
///
/// Strictly increasing, f(1) = 0, and maps rationals to rationals, so the
/// re-metrized interval stays inside exact arithmetic.
pub fn chart_f(x: &Rat) -> Rat {
    debug_assert!(x.is_positive() && *x < Rat::two());
    let two_minus_x = Rat::two() - x.clone();
    two_minus_x.recip() - x.recip()
}

/// The bounded metric on one interval copy: min(1, |f(x) - f(y)|).
pub fn chart_rho(x: &Rat, y: &Rat) -> Rat {
    Rat::one().min((chart_f(x) - chart_f(y)).abs())
}

impl SpaceSpec {
    pub fn zero_one(size: u64) -> Self {
        SpaceSpec::ZeroOne {
            size: Extent::Finite(size),
        }
    }

    pub fn zero_one_unbounded() -> Self {
        SpaceSpec::ZeroOne {
            size: Extent::Unbounded,
        }
    }

    pub fn paired(pairs: u64) -> Self {
        SpaceSpec::PairedTwoPoint {
            pairs: Extent::Finite(pairs),
        }
    }

    pub fn free_sum(summands: Vec<(u64, SpaceSpec)>) -> Self {
        SpaceSpec::FreeSum {
            summands: summands
                .into_iter()
                .map(|(tag, space)| SummandSpec { tag, space })
                .collect(),
        }
    }

    pub fn interval_copies(copies: u64) -> Self {
        SpaceSpec::IntervalCopies { copies }
    }

    /// An attained upper bound for the metric's value set.
    pub fn max_value_bound(&self) -> Rat {
        match self {
            SpaceSpec::ZeroOne { .. } => Rat::one(),
            SpaceSpec::PairedTwoPoint { .. } => Rat::two(),
            SpaceSpec::DyadicNat => Rat::new(1, 2),
            SpaceSpec::FreeSum { summands } => {
                if summands.len() >= 2 {
                    Rat::two()
                } else {
                    summands
                        .first()
                        .map(|s| s.space.max_value_bound())
                        .unwrap_or_else(Rat::zero)
                }
            }
            SpaceSpec::IntervalCopies { copies } => {
                if *copies >= 2 {
                    Rat::two()
                } else {
                    Rat::one()
                }
            }
        }
    }

    /// The finite value set of the metric, sorted ascending, when one exists.
    pub fn finite_value_set(&self) -> Option<Vec<Rat>> {
        match self {
            SpaceSpec::ZeroOne { .. } => Some(vec![Rat::zero(), Rat::one()]),
            SpaceSpec::PairedTwoPoint { .. } => {
                Some(vec![Rat::zero(), Rat::one(), Rat::two()])
            }
            SpaceSpec::FreeSum { summands } => {
                let mut values: Vec<Rat> = Vec::new();
                for s in summands {
                    values.extend(s.space.finite_value_set()?);
                }
                if summands.len() >= 2 {
                    values.push(Rat::two());
                }
                values.sort();
                values.dedup();
                Some(values)
            }
            SpaceSpec::DyadicNat | SpaceSpec::IntervalCopies { .. } => None,
        }
    }

    /// Checks the structural invariants of the description itself.
    pub fn validate(&self) -> Result<()> {
        match self {
            SpaceSpec::ZeroOne { size } => {
                if matches!(size, Extent::Finite(0)) {
                    return Err(Error::MalformedSpec("0-1 space must be non-empty".into()));
                }
                Ok(())
            }
            SpaceSpec::PairedTwoPoint { pairs } => {
                if matches!(pairs, Extent::Finite(0)) {
                    return Err(Error::MalformedSpec(
                        "paired space needs at least one pair".into(),
                    ));
                }
                Ok(())
            }
            SpaceSpec::DyadicNat => Ok(()),
            SpaceSpec::FreeSum { summands } => {
                if summands.is_empty() {
                    return Err(Error::MalformedSpec(
                        "free sum needs at least one summand".into(),
                    ));
                }
                let mut tags: Vec<u64> = summands.iter().map(|s| s.tag).collect();
                tags.sort_unstable();
                tags.dedup();
                if tags.len() != summands.len() {
                    return Err(Error::MalformedSpec(
                        "free sum summand tags must be pairwise distinct".into(),
                    ));
                }
                for s in summands {
                    s.space.validate()?;
                    if s.space.max_value_bound() > Rat::one() {
                        return Err(Error::MalformedSpec(format!(
                            "summand {} has metric values outside [0,1] (bound {})",
                            s.tag,
                            s.space.max_value_bound()
                        )));
                    }
                }
                Ok(())
            }
            SpaceSpec::IntervalCopies { copies } => {
                if *copies == 0 {
                    return Err(Error::MalformedSpec(
                        "interval-copies space needs at least one copy".into(),
                    ));
                }
                Ok(())
            }
        }
    }

    /// The summand space registered under `tag`, if any.
    pub fn summand(&self, tag: u64) -> Option<&SpaceSpec> {
        match self {
            SpaceSpec::FreeSum { summands } => summands
                .iter()
                .find(|s| s.tag == tag)
                .map(|s| &s.space),
            _ => None,
        }
    }

    pub fn summand_tags(&self) -> Vec<u64> {
        match self {
            SpaceSpec::FreeSum { summands } => summands.iter().map(|s| s.tag).collect(),
            _ => Vec::new(),
        }
    }

    /// Is `p` a member of this space's universe?
    pub fn validate_point(&self, p: &Point) -> Result<()> {
        let mismatch = |msg: String| Err(Error::PointOutOfSpace(msg));
        match (self, p) {
            (SpaceSpec::ZeroOne { size }, Point::Atom { index }) => {
                if size.contains(*index) {
                    Ok(())
                } else {
                    mismatch(format!("atom index {index} exceeds universe"))
                }
            }
            (SpaceSpec::PairedTwoPoint { pairs }, Point::Paired { pair, side }) => {
                if *side > 1 {
                    return mismatch(format!("pair side must be 0 or 1, got {side}"));
                }
                if pairs.contains(*pair) {
                    Ok(())
                } else {
                    mismatch(format!("pair index {pair} exceeds universe"))
                }
            }
            (SpaceSpec::DyadicNat, Point::Nat { n }) => {
                if *n >= 1 {
                    Ok(())
                } else {
                    mismatch("naturals are 1-based".into())
                }
            }
            (SpaceSpec::FreeSum { .. }, Point::Summand { tag, inner }) => {
                match self.summand(*tag) {
                    Some(space) => space.validate_point(inner),
                    None => mismatch(format!("no summand with tag {tag}")),
                }
            }
            (SpaceSpec::IntervalCopies { copies }, Point::CopyPoint { copy, x }) => {
                if copy >= copies {
                    return mismatch(format!("copy index {copy} exceeds {copies} copies"));
                }
                if x.is_positive() && *x < Rat::two() {
                    Ok(())
                } else {
                    mismatch(format!("interval coordinate {x} outside (0,2)"))
                }
            }
            (_, p) => mismatch(format!("point {p:?} has the wrong shape for this space")),
        }
    }

    /// Exact metric value between two points of this space.
    pub fn dist(&self, p: &Point, q: &Point) -> Result<Rat> {
        self.validate()?;
        self.validate_point(p)?;
        self.validate_point(q)?;
        Ok(self.dist_unchecked(p, q))
    }

    /// Metric value assuming both points were already validated.
    pub(crate) fn dist_unchecked(&self, p: &Point, q: &Point) -> Rat {
        if p == q {
            return Rat::zero();
        }
        match (self, p, q) {
            (SpaceSpec::ZeroOne { .. }, _, _) => Rat::one(),
            (
                SpaceSpec::PairedTwoPoint { .. },
                Point::Paired { pair: a, .. },
                Point::Paired { pair: b, .. },
            ) => {
                // p != q here, so equal pair indices mean opposite sides.
                if a == b {
                    Rat::two()
                } else {
                    Rat::one()
                }
            }
            (SpaceSpec::DyadicNat, Point::Nat { n }, Point::Nat { n: k }) => {
                Rat::pow2_diff(*n, *k)
            }
            (
                SpaceSpec::FreeSum { .. },
                Point::Summand { tag: a, inner: x },
                Point::Summand { tag: b, inner: y },
            ) => {
                if a == b {
                    self.summand(*a)
                        .expect("validated summand tag")
                        .dist_unchecked(x, y)
                } else {
                    Rat::two()
                }
            }
            (
                SpaceSpec::IntervalCopies { .. },
                Point::CopyPoint { copy: a, x },
                Point::CopyPoint { copy: b, x: y },
            ) => {
                if a == b {
                    chart_rho(x, y)
                } else {
                    Rat::two()
                }
            }
            _ => unreachable!("validate_point rules out shape mismatches"),
        }
    }

    /// The canonical least point of the space (used to pick deterministic
    /// witness points). For interval copies the chart origin x = 1 is used.
    pub fn least_point(&self) -> Result<Point> {
        self.validate()?;
        Ok(match self {
            SpaceSpec::ZeroOne { .. } => Point::atom(0),
            SpaceSpec::PairedTwoPoint { .. } => Point::paired(0, 0),
            SpaceSpec::DyadicNat => Point::nat(1),
            SpaceSpec::FreeSum { summands } => {
                let first = summands.iter().min_by_key(|s| s.tag).expect("non-empty");
                Point::summand(first.tag, first.space.least_point()?)
            }
            SpaceSpec::IntervalCopies { .. } => Point::copy_point(0, Rat::one()),
        })
    }

    /// The first `bound` indices/pairs/naturals of the universe, in canonical
    /// order. Interval copies are uncountable and cannot be listed.
    pub fn bounded_universe(&self, bound: u64) -> Result<Vec<Point>> {
        self.validate()?;
        match self {
            SpaceSpec::ZeroOne { size } => {
                Ok((0..size.capped(bound)).map(Point::atom).collect())
            }
            SpaceSpec::PairedTwoPoint { pairs } => {
                let mut points = Vec::new();
                for pair in 0..pairs.capped(bound) {
                    points.push(Point::paired(pair, 0));
                    points.push(Point::paired(pair, 1));
                }
                Ok(points)
            }
            SpaceSpec::DyadicNat => Ok((1..=bound).map(Point::nat).collect()),
            SpaceSpec::FreeSum { summands } => {
                let mut points = Vec::new();
                for s in summands {
                    for inner in s.space.bounded_universe(bound)? {
                        points.push(Point::summand(s.tag, inner));
                    }
                }
                Ok(points)
            }
            SpaceSpec::IntervalCopies { .. } => Err(Error::NotRepresentable(
                "interval copies have no finite point universe; pass explicit probes".into(),
            )),
        }
    }
}

/// Exhaustively checks the metric axioms over a finite sample, exactly.
///
/// Non-negativity, identity of indiscernibles and symmetry run over all
/// ordered pairs; the triangle inequality over all ordered triples. The
/// first violation is reported as a counterexample.
pub fn check_metric_axioms(spec: &SpaceSpec, sample: &[Point]) -> Result<VerificationReport> {
    spec.validate()?;
    if sample.is_empty() {
        return Err(Error::EmptySet);
    }
    for p in sample {
        spec.validate_point(p)?;
    }

    let mut report = VerificationReport::new("metric-axioms", QuantifierScope::RepresentableOnly);
    let n = sample.len();
    let mut checked: u64 = 0;

    for p in sample {
        for q in sample {
            let d = spec.dist_unchecked(p, q);
            checked += 1;
            if d.is_negative() {
                return Ok(report.refuted(serde_json::json!({
                    "axiom": "non-negativity",
                    "p": p, "q": q, "d": d.to_string(),
                })));
            }
            if d.is_zero() != (p == q) {
                return Ok(report.refuted(serde_json::json!({
                    "axiom": "identity-of-indiscernibles",
                    "p": p, "q": q, "d": d.to_string(),
                })));
            }
            if d != spec.dist_unchecked(q, p) {
                return Ok(report.refuted(serde_json::json!({
                    "axiom": "symmetry",
                    "p": p, "q": q,
                    "d_pq": d.to_string(),
                    "d_qp": spec.dist_unchecked(q, p).to_string(),
                })));
            }
        }
    }

    for p in sample {
        for q in sample {
            let d_pq = spec.dist_unchecked(p, q);
            for r in sample {
                checked += 1;
                let lhs = spec.dist_unchecked(p, r);
                let rhs = &d_pq + &spec.dist_unchecked(q, r);
                if lhs > rhs {
                    return Ok(report.refuted(serde_json::json!({
                        "axiom": "triangle",
                        "p": p, "q": q, "r": r,
                        "d_pr": lhs.to_string(),
                        "d_pq_plus_d_qr": rhs.to_string(),
                    })));
                }
            }
        }
    }

    report.stats.sets_enumerated = checked;
    report.witness = Some(serde_json::json!({
        "points": n,
        "orderedTriples": n * n * n,
    }));
    report.outcome = Outcome::Verified;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn dyadic_neighbor_distance_matches_formula() {
        // d(k, k+1) = 2^-k - 2^-(k+1); with k = 1 this is 1/4.
        let spec = SpaceSpec::DyadicNat;
        assert_eq!(spec.dist(&Point::nat(1), &Point::nat(2)).unwrap(), r(1, 4));
        assert_eq!(spec.dist(&Point::nat(3), &Point::nat(1)).unwrap(), r(3, 8));
    }

    #[test]
    fn same_point_distance_is_zero() {
        let cases: Vec<(SpaceSpec, Point)> = vec![
            (SpaceSpec::zero_one(3), Point::atom(2)),
            (SpaceSpec::paired(2), Point::paired(1, 1)),
            (SpaceSpec::DyadicNat, Point::nat(7)),
            (
                SpaceSpec::interval_copies(2),
                Point::copy_point(1, r(1, 3)),
            ),
        ];
        for (spec, p) in cases {
            assert!(spec.dist(&p, &p).unwrap().is_zero(), "{spec:?}");
        }
    }

    #[test]
    fn paired_metric_values() {
        let spec = SpaceSpec::paired(2);
        // Same pair, opposite sides: 2. Different pairs: 1.
        assert_eq!(
            spec.dist(&Point::paired(0, 0), &Point::paired(0, 1)).unwrap(),
            r(2, 1)
        );
        assert_eq!(
            spec.dist(&Point::paired(0, 0), &Point::paired(1, 1)).unwrap(),
            r(1, 1)
        );
    }

    #[test]
    fn chart_values_computed_directly() {
        // Independent evaluation of 1/(2-x) - 1/x at 1/2 and 3/2.
        let f_half = r(1, 1) / (r(2, 1) - r(1, 2)) - r(1, 1) / r(1, 2);
        let f_three_halves = r(1, 1) / (r(2, 1) - r(3, 2)) - r(1, 1) / r(3, 2);
        assert_eq!(f_half, r(-4, 3));
        assert_eq!(f_three_halves, r(4, 3));
        assert_eq!(chart_f(&r(1, 2)), f_half);
        assert_eq!(chart_f(&r(3, 2)), f_three_halves);
        assert_eq!(chart_f(&r(1, 1)), r(0, 1));
    }

    #[test]
    fn interval_copies_distance_truncates_at_one() {
        let spec = SpaceSpec::interval_copies(1);
        // |f(3/2) - f(1/2)| = 8/3, truncated to 1.
        assert_eq!(
            spec.dist(&Point::copy_point(0, r(1, 2)), &Point::copy_point(0, r(3, 2)))
                .unwrap(),
            r(1, 1)
        );
    }

    #[test]
    fn interval_cross_copy_distance_is_two() {
        let spec = SpaceSpec::interval_copies(2);
        assert_eq!(
            spec.dist(&Point::copy_point(0, r(1, 1)), &Point::copy_point(1, r(1, 1)))
                .unwrap(),
            r(2, 1)
        );
    }

    #[test]
    fn chart_strictly_increasing_on_sample() {
        let xs = [
            r(1, 8),
            r(1, 4),
            r(1, 2),
            r(1, 1),
            r(5, 4),
            r(3, 2),
            r(7, 4),
            r(15, 8),
        ];
        for w in xs.windows(2) {
            assert!(chart_f(&w[0]) < chart_f(&w[1]), "{:?}", w);
        }
        for x in &xs {
            for y in &xs {
                let d = chart_rho(x, y);
                assert!(!d.is_negative() && d <= Rat::one());
            }
        }
    }

    #[test]
    fn free_sum_cross_summand_distance() {
        let spec = SpaceSpec::free_sum(vec![
            (0, SpaceSpec::zero_one(2)),
            (1, SpaceSpec::zero_one(2)),
        ]);
        let p = Point::summand(0, Point::atom(0));
        let q = Point::summand(1, Point::atom(0));
        assert_eq!(spec.dist(&p, &q).unwrap(), r(2, 1));
        let q2 = Point::summand(0, Point::atom(1));
        assert_eq!(spec.dist(&p, &q2).unwrap(), r(1, 1));
    }

    #[test]
    fn free_sum_rejects_summand_values_outside_unit_interval() {
        // The paired metric attains 2 > 1, so it cannot be a summand.
        let spec = SpaceSpec::free_sum(vec![
            (0, SpaceSpec::zero_one(2)),
            (1, SpaceSpec::paired(1)),
        ]);
        assert!(matches!(spec.validate(), Err(Error::MalformedSpec(_))));
        // Nested free sums attain 2 as well.
        let nested = SpaceSpec::free_sum(vec![(
            0,
            SpaceSpec::free_sum(vec![
                (0, SpaceSpec::zero_one(2)),
                (1, SpaceSpec::zero_one(2)),
            ]),
        )]);
        assert!(matches!(nested.validate(), Err(Error::MalformedSpec(_))));
        // Duplicate tags are a disjointness violation.
        let dup = SpaceSpec::free_sum(vec![
            (3, SpaceSpec::zero_one(2)),
            (3, SpaceSpec::zero_one(2)),
        ]);
        assert!(matches!(dup.validate(), Err(Error::MalformedSpec(_))));
    }

    #[test]
    fn point_validation() {
        let spec = SpaceSpec::zero_one(2);
        assert!(spec.validate_point(&Point::atom(1)).is_ok());
        assert!(matches!(
            spec.validate_point(&Point::atom(2)),
            Err(Error::PointOutOfSpace(_))
        ));
        assert!(matches!(
            spec.validate_point(&Point::nat(1)),
            Err(Error::PointOutOfSpace(_))
        ));
        assert!(matches!(
            SpaceSpec::DyadicNat.validate_point(&Point::nat(0)),
            Err(Error::PointOutOfSpace(_))
        ));
        assert!(matches!(
            SpaceSpec::interval_copies(1).validate_point(&Point::copy_point(0, r(2, 1))),
            Err(Error::PointOutOfSpace(_))
        ));
        assert!(SpaceSpec::interval_copies(1)
            .validate_point(&Point::copy_point(0, r(15, 8)))
            .is_ok());
    }

    #[test]
    fn axioms_hold_on_paired_space() {
        let spec = SpaceSpec::paired(2);
        let sample = spec.bounded_universe(2).unwrap();
        assert_eq!(sample.len(), 4);
        let report = check_metric_axioms(&spec, &sample).unwrap();
        assert_eq!(report.outcome, Outcome::Verified);
    }

    #[test]
    fn axioms_hold_on_dyadic_sample() {
        let spec = SpaceSpec::DyadicNat;
        let sample: Vec<Point> = (1..=10).map(Point::nat).collect();
        let report = check_metric_axioms(&spec, &sample).unwrap();
        assert_eq!(report.outcome, Outcome::Verified);
    }

    #[test]
    fn axiom_check_rejects_malformed_free_sum() {
        let spec = SpaceSpec::free_sum(vec![(0, SpaceSpec::paired(1))]);
        let sample = vec![Point::summand(0, Point::paired(0, 0))];
        assert!(matches!(
            check_metric_axioms(&spec, &sample),
            Err(Error::MalformedSpec(_))
        ));
    }

    #[test]
    fn bounded_universe_ordering() {
        let spec = SpaceSpec::paired(3);
        let u = spec.bounded_universe(2).unwrap();
        assert_eq!(
            u,
            vec![
                Point::paired(0, 0),
                Point::paired(0, 1),
                Point::paired(1, 0),
                Point::paired(1, 1),
            ]
        );
        assert_eq!(SpaceSpec::DyadicNat.bounded_universe(3).unwrap().len(), 3);
    }

    #[test]
    fn spec_json_roundtrip() {
        let specs = vec![
            SpaceSpec::zero_one(4),
            SpaceSpec::zero_one_unbounded(),
            SpaceSpec::paired(3),
            SpaceSpec::DyadicNat,
            SpaceSpec::free_sum(vec![
                (0, SpaceSpec::zero_one(2)),
                (1, SpaceSpec::zero_one(3)),
            ]),
            SpaceSpec::interval_copies(2),
        ];
        for spec in specs {
            let js = serde_json::to_string(&spec).unwrap();
            let back: SpaceSpec = serde_json::from_str(&js).unwrap();
            assert_eq!(back, spec, "{js}");
        }
        let js = serde_json::to_string(&SpaceSpec::zero_one_unbounded()).unwrap();
        assert!(js.contains("\"unbounded\""), "{js}");
    }

    #[test]
    fn point_json_shape() {
        let p = Point::copy_point(0, r(3, 2));
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"{"kind":"copy-point","copy":0,"x":"3/2"}"#);
        let q: Point = serde_json::from_str(&js).unwrap();
        assert_eq!(q, p);
    }
}
