//! Golden checks against the built-in example sessions.

use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use super::*;
use crate::frobenius::{
    fedder_is_fpure, frobenius_root, frobenius_root_ideal, in_frobenius_closure,
};
use crate::groebner::{intersect_all, Ideal};
use crate::hilbert::{format_univariate, hilbert_series};
use crate::poly::{parse_poly, Term};
use crate::session::{parse_session, Session};

const EXAMPLE1: &str = include_str!("../../assets/example1.fpl");
const EXAMPLE2: &str = include_str!("../../assets/example2.fpl");

/// The built-in suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteName {
    Example1,
    Example2,
    Remark33 { n: u64, p: u32 },
    Bounds,
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuiteName::Example1 => write!(f, "example1"),
            SuiteName::Example2 => write!(f, "example2"),
            SuiteName::Remark33 { n, p } => write!(f, "remark33({n},{p})"),
            SuiteName::Bounds => write!(f, "bounds"),
        }
    }
}

impl FromStr for SuiteName {
    type Err = Error;

    /// `example1`, `example2`, `bounds`, `remark33` (n = 3, p = 2) or
    /// `remark33(n,p)`.
    fn from_str(s: &str) -> Result<SuiteName> {
        let s = s.trim();
        match s {
            "example1" => return Ok(SuiteName::Example1),
            "example2" => return Ok(SuiteName::Example2),
            "bounds" => return Ok(SuiteName::Bounds),
            "remark33" => return Ok(SuiteName::Remark33 { n: 3, p: 2 }),
            _ => {}
        }
        let bad = || Error::InvalidArgument(format!("unknown suite '{s}'"));
        let args = s
            .strip_prefix("remark33(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (n, p) = args.split_once(',').ok_or_else(bad)?;
        let n = n.trim().parse().map_err(|_| bad())?;
        let p: u64 = p.trim().parse().map_err(|_| bad())?;
        Ok(SuiteName::Remark33 {
            n,
            p: Prime::new(p)?.get(),
        })
    }
}

/// One golden check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub verdict: Verdict,
    pub expected: String,
    pub observed: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    /// Sorted by check name.
    pub checks: Vec<CheckReport>,
    /// Claims about the example that this suite does not test.
    pub notes: Vec<String>,
}

impl SuiteReport {
    /// `error` beats `fail` beats `inconclusive` beats `pass`.
    pub fn verdict(&self) -> Verdict {
        let has = |v| self.checks.iter().any(|c| c.verdict == v);
        if has(Verdict::Error) {
            Verdict::Error
        } else if has(Verdict::Fail) {
            Verdict::Fail
        } else if has(Verdict::Inconclusive) {
            Verdict::Inconclusive
        } else {
            Verdict::Pass
        }
    }
}

/// Text of the generated session for the `(n, p)` hypersurface family.
pub fn remark33_session_text(n: u64, p: Prime) -> Result<String> {
    let (f, h) = make_remark33_family(n, p)?;
    let ring = f.ring();
    let hats: Vec<String> = (0..n as usize)
        .map(|i| {
            let vars: Vec<&str> = ring
                .vars()
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, v)| v.as_str())
                .collect();
            vars.join("*")
        })
        .collect();
    Ok(format!(
        "# hypersurface family with n = {n}, p = {p}\n\
         ring p={p} vars={} order=grevlex\n\
         poly f = {f}\n\
         poly h = {h}\n\
         ideal hat = {}\n",
        ring.vars().join(","),
        hats.join(", ")
    ))
}

/// Loads `example1.fpl`, `example2.fpl` or `remark33_<n>_<p>.fpl`.
pub fn embedded_session(name: &str) -> Result<Session> {
    let stem = name.strip_suffix(".fpl").unwrap_or(name);
    match stem {
        "example1" => parse_session(EXAMPLE1, "example1.fpl"),
        "example2" => parse_session(EXAMPLE2, "example2.fpl"),
        _ => {
            let bad = || Error::InvalidArgument(format!("no embedded session '{name}'"));
            let rest = stem.strip_prefix("remark33_").ok_or_else(bad)?;
            let (n, p) = rest.split_once('_').ok_or_else(bad)?;
            let n: u64 = n.parse().map_err(|_| bad())?;
            let p = Prime::new(p.parse().map_err(|_| bad())?)?;
            parse_session(
                &remark33_session_text(n, p)?,
                &format!("remark33_{n}_{p}.fpl"),
            )
        }
    }
}

type Outcome = Result<(Verdict, Value)>;

fn pass_if(ok: bool, observed: Value) -> Outcome {
    Ok((if ok { Verdict::Pass } else { Verdict::Fail }, observed))
}

fn run_check(name: &str, expected: &str, body: impl FnOnce() -> Outcome) -> CheckReport {
    let (verdict, observed, message) = match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok((v, obs))) => (v, obs, None),
        Ok(Err(Error::Inconclusive(m))) => (Verdict::Inconclusive, Value::Null, Some(m)),
        Ok(Err(e)) => (Verdict::Error, Value::Null, Some(e.to_string())),
        Err(_) => (
            Verdict::Error,
            Value::Null,
            Some("internal panic".to_string()),
        ),
    };
    CheckReport {
        name: name.to_string(),
        verdict,
        expected: expected.to_string(),
        observed,
        message,
    }
}

fn basis_strings(ideal: &Ideal) -> Result<Vec<String>> {
    Ok(ideal
        .grevlex_basis()?
        .elements()
        .iter()
        .map(|g| g.to_string())
        .collect())
}

fn example1(s: &Session) -> Vec<CheckReport> {
    let i = s.ideal("I");
    vec![
        run_check("dimension", "2", || {
            let d = dimension(i.clone()?)?;
            pass_if(d == 2, json!(d))
        }),
        run_check("hilbert_numerator", "1 + 2t + 3t^2 + 2t^3 - t^4", || {
            let hs = hilbert_series(i.clone()?)?;
            pass_if(
                hs.reduced_numerator == [1, 2, 3, 2, -1] && hs.pole_order == 2,
                json!({
                    "series": hs.to_string(),
                    "reduced_numerator": hs.reduced_numerator,
                    "raw_numerator": format_univariate(&hs.raw_numerator),
                }),
            )
        }),
        run_check("hw_bound_exceeded", "e = 7 > C(4,2) = 6", || {
            let r = check_hw_bound(i.clone()?)?;
            pass_if(
                r.e == 7 && r.bound() == 6 && !r.holds(),
                serde_json::to_value(&r).unwrap(),
            )
        }),
        run_check("intersection_identity", "C1 ∩ ... ∩ C7 = I", || {
            let comps: Vec<Ideal> = (1..=7)
                .map(|k| s.ideal(&format!("C{k}")).cloned())
                .collect::<Result<_>>()?;
            let meet = intersect_all(&comps)?;
            pass_if(meet.ideal_eq(i.clone()?)?, json!(basis_strings(&meet)?))
        }),
    ]
}

fn example2(s: &Session, e_max: u32, s_max: u32) -> Vec<CheckReport> {
    let fedder = |name: &str| {
        let ideal = s.ideal(name).cloned();
        move || -> Outcome {
            let pure = fedder_is_fpure(&ideal?)?;
            pass_if(pure, json!(pure))
        }
    };
    let ring = &s.ring;
    vec![
        run_check("fedder_i1", "S/I1 F-pure", fedder("I1")),
        run_check("fedder_i2", "S/I2 F-pure", fedder("I2")),
        run_check("fedder_i1_plus_i2", "S/(I1 + I2) F-pure", || {
            let sum = ideal_sum(s.ideal("I1")?, s.ideal("I2")?)?;
            let pure = fedder_is_fpure(&sum)?;
            pass_if(pure, json!(pure))
        }),
        run_check(
            "reduction",
            "J is a minimal reduction of m with s <= 5",
            || {
                let rep = is_reduction(s.ideal("J")?, s.ideal("I")?, s_max)?;
                let ok = matches!(rep.outcome, ReductionOutcome::ReductionAt { s } if s <= 5);
                let observed = serde_json::to_value(&rep).unwrap();
                match rep.verdict() {
                    Verdict::Inconclusive => Ok((Verdict::Inconclusive, observed)),
                    _ => pass_if(ok && rep.minimal, observed),
                }
            },
        ),
        run_check("v2_not_in_j", "v^2 ∉ J + I", || {
            let member = ideal_sum(s.ideal("J")?, s.ideal("I")?)?.contains(s.poly("g")?)?;
            pass_if(!member, json!(member))
        }),
        run_check(
            "v4_identity",
            "v^4 - rhs ∈ I and v^2 ∈ J^F with e = 1",
            || {
                let v4 = parse_poly("v^4", ring)?;
                let nf = s.ideal("I")?.normal_form(&v4.sub(s.poly("rhs")?)?)?;
                let closure =
                    in_frobenius_closure(s.poly("g")?, s.ideal("J")?, s.ideal("I")?, e_max)?;
                let witness_e = match &closure {
                    ClosureMembership::Member(w) => Some(w.e),
                    ClosureMembership::NonMemberUpTo { .. } => None,
                };
                pass_if(
                    nf.is_zero() && witness_e == Some(1),
                    json!({ "normal_form": nf.to_string(), "closure": closure }),
                )
            },
        ),
    ]
}

/// `∂f/∂x_k`.
fn derivative(f: &Polynomial, k: usize) -> Polynomial {
    let terms = f
        .terms()
        .iter()
        .filter(|t| t.mono.exps()[k] > 0)
        .map(|t: &Term| {
            let mut e = t.mono.exps().to_vec();
            let a = e[k];
            e[k] -= 1;
            (
                f.ring().prime().mul(t.coeff, a % f.ring().p()),
                Monomial::new(e),
            )
        });
    Polynomial::from_terms(f.ring(), terms)
}

fn remark33(n: u64, p: Prime, e_max: u32) -> Vec<CheckReport> {
    let session = embedded_session(&format!("remark33_{n}_{p}"));
    let s = match session {
        Ok(s) => s,
        Err(e) => {
            return vec![run_check("session", "generated session loads", || Err(e))];
        }
    };
    let f = s.poly("f");
    // η = 1, so Q = p
    let q_times_n = p.get() as u64 * n;
    vec![
        run_check("derivative", "∂f/∂x_n = h^p", || {
            let f = f.clone()?;
            let d = derivative(f, n as usize - 1);
            let hp = s.poly("h")?.pow(p.get() as u64)?;
            pass_if(d == hp, json!(d.to_string()))
        }),
        run_check("eta", "1", || {
            let chain = hsl_hypersurface(f.clone()?, e_max)?;
            let eta = chain.stabilized_at.ok_or_else(|| {
                Error::Inconclusive(format!("HSL chain not stable within e_max = {e_max}"))
            })?;
            pass_if(eta == 1, json!(eta))
        }),
        run_check(
            "gamma",
            &gamma(n, p).map(|g| g.to_string()).unwrap_or_default(),
            || {
                let formula = gamma(n, p)?;
                let assembled = gamma_from_family(n, p, e_max)?;
                pass_if(
                    formula == assembled,
                    json!({ "formula": formula, "assembled": assembled }),
                )
            },
        ),
        run_check(
            "hat_monomials",
            "I_1(f) = (x1⋯x̂i⋯xn : i = 1..n)",
            || {
                let root = frobenius_root(f.clone()?, 1)?;
                pass_if(
                    root.ideal_eq(s.ideal("hat")?)?,
                    json!(basis_strings(&root)?),
                )
            },
        ),
        run_check("hsl_bound", &format!("e <= Q*n = {q_times_n}"), || {
            let r = check_hsl_bound(f.clone()?, e_max)?;
            pass_if(
                r.holds() && r.bound() == q_times_n,
                serde_json::to_value(&r).unwrap(),
            )
        }),
        run_check("root_fixed", "I_1(f I_1(f)) = I_1(f)", || {
            let f = f.clone()?;
            let root = frobenius_root(f, 1)?;
            let next = frobenius_root_ideal(&ideal_product(&Ideal::principal(f), &root)?, 1)?;
            pass_if(next.ideal_eq(&root)?, json!(basis_strings(&next)?))
        }),
    ]
}

fn bounds(e_max: u32, s_max: u32) -> Vec<CheckReport> {
    let xy = || -> Result<(Ring, Ideal, Ideal)> {
        let s = parse_session("ring p=2 vars=x,y\nideal I = x*y\nideal J = x + y\n", "xy")?;
        Ok((s.ring.clone(), s.ideal("I")?.clone(), s.ideal("J")?.clone()))
    };
    let example2 = || -> Result<(Ideal, Ideal)> {
        let s = embedded_session("example2")?;
        Ok((s.ideal("J")?.clone(), s.ideal("I")?.clone()))
    };
    vec![
        run_check("binom_4_2", "6", || {
            let b = binom(4, 2)?;
            pass_if(b == 6, json!(b))
        }),
        run_check(
            "cor24b_example2",
            "e <= C(v,d) + ℓ(J^F/J) with ℓ >= 1",
            || {
                let (j, i) = example2()?;
                let r = check_cor24b(&j, &i, e_max)?;
                let excess = match r.shape {
                    BoundShape::ClosureExcess { excess } => excess,
                    _ => 0,
                };
                pass_if(r.holds() && excess >= 1, serde_json::to_value(&r).unwrap())
            },
        ),
        run_check("cor24b_regular", "e = 1 <= C(3,3) + 0", || {
            let s = parse_session("ring p=3 vars=x,y,z\n", "regular")?;
            let r = check_cor24b(&Ideal::maximal(&s.ring), &Ideal::zero(&s.ring), e_max)?;
            pass_if(
                r.holds() && r.bound() == 1,
                serde_json::to_value(&r).unwrap(),
            )
        }),
        run_check("cor24b_xy", "e = 2 <= C(2,1) + 0", || {
            let (_, i, j) = xy()?;
            let r = check_cor24b(&j, &i, e_max)?;
            pass_if(
                r.holds() && r.bound() == 2,
                serde_json::to_value(&r).unwrap(),
            )
        }),
        run_check("gamma_limit", "Γ(10,2) = 19/20 > Γ(3,2) = 5/6", || {
            let two = Prime::new(2)?;
            let (g10, g3) = (gamma(10, two)?, gamma(3, two)?);
            pass_if(
                g10 > g3 && g10 == Rational { num: 19, den: 20 },
                json!({ "gamma_10_2": g10, "gamma_3_2": g3 }),
            )
        }),
        run_check("hsl_xy", "η = 0, e = 2 <= 2", || {
            let (_, i, _) = xy()?;
            let r = check_hsl_bound(&i.gens()[0], e_max)?;
            pass_if(
                r.holds() && r.bound() == 2 && r.auxiliaries.get("eta") == Some(&Aux::Int(0)),
                serde_json::to_value(&r).unwrap(),
            )
        }),
        run_check("hw_xy", "e = 2 <= C(2,1) = 2", || {
            let (_, i, _) = xy()?;
            let r = check_hw_bound(&i)?;
            pass_if(r.holds() && r.e == 2, serde_json::to_value(&r).unwrap())
        }),
        run_check("hw_zero", "e = 1 <= C(n,n) = 1", || {
            let (r, _, _) = xy()?;
            let rep = check_hw_bound(&Ideal::zero(&r))?;
            pass_if(
                rep.holds() && rep.e == 1,
                serde_json::to_value(&rep).unwrap(),
            )
        }),
        run_check("reduction_xy", "reduction at s = 1", || {
            let (_, i, j) = xy()?;
            let rep = is_reduction(&j, &i, s_max)?;
            pass_if(
                rep.outcome == ReductionOutcome::ReductionAt { s: 1 },
                serde_json::to_value(&rep).unwrap(),
            )
        }),
        run_check("skoda_example2", "m^4 ⊆ J^F", || {
            let (j, i) = example2()?;
            let rep = check_skoda(&j, &i, e_max.min(2))?;
            Ok((rep.verdict(), serde_json::to_value(&rep).unwrap()))
        }),
        run_check("skoda_xy", "m^2 ⊆ J^F", || {
            let (_, i, j) = xy()?;
            let rep = check_skoda(&j, &i, e_max)?;
            Ok((rep.verdict(), serde_json::to_value(&rep).unwrap()))
        }),
    ]
}

/// Runs a suite. Every check runs even when earlier ones fail; checks are
/// returned sorted by name.
pub fn run_suite(name: SuiteName, e_max: u32, s_max: u32) -> SuiteReport {
    let mut notes = Vec::new();
    let mut checks = match name {
        SuiteName::Example1 => match embedded_session("example1") {
            Ok(s) => example1(&s),
            Err(e) => vec![run_check("session", "example1.fpl loads", || Err(e))],
        },
        SuiteName::Example2 => {
            notes.push(
                "unchecked: the localization at m has depth 2 (needs a free resolution)".into(),
            );
            notes.push("unchecked: F-injectivity of S/I (assumed, not decided here)".into());
            match embedded_session("example2") {
                Ok(s) => example2(&s, e_max, s_max),
                Err(e) => vec![run_check("session", "example2.fpl loads", || Err(e))],
            }
        }
        SuiteName::Remark33 { n, p } => match Prime::new(p as u64) {
            Ok(p) => remark33(n, p, e_max),
            Err(e) => vec![run_check("session", "valid prime", || Err(e))],
        },
        SuiteName::Bounds => bounds(e_max, s_max),
    };
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    SuiteReport {
        suite: name.to_string(),
        checks,
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        assert_eq!(
            "example1".parse::<SuiteName>().unwrap(),
            SuiteName::Example1
        );
        assert_eq!(
            "remark33(4,3)".parse::<SuiteName>().unwrap(),
            SuiteName::Remark33 { n: 4, p: 3 }
        );
        assert!("remark33(4,4)".parse::<SuiteName>().is_err());
        assert!("nope".parse::<SuiteName>().is_err());
        assert_eq!(
            SuiteName::Remark33 { n: 3, p: 2 }.to_string(),
            "remark33(3,2)"
        );
    }

    #[test]
    fn embedded_sessions() {
        let s = embedded_session("example2.fpl").unwrap();
        assert_eq!(s.ring.vars(), ["x", "y", "u", "v", "w"]);
        for name in ["I1", "I2", "I", "J"] {
            assert!(s.ideals.contains_key(name));
        }
        let s = embedded_session("remark33_3_2").unwrap();
        assert_eq!(s.poly("f").unwrap().degree(), Some(5));
        assert_eq!(s.ideal("hat").unwrap().gens().len(), 3);
        assert!(embedded_session("remark33_3").is_err());
        assert!(embedded_session("nothing").is_err());
    }

    #[test]
    fn derivative_of_family() {
        let (f, h) = make_remark33_family(3, Prime::new(3).unwrap()).unwrap();
        assert_eq!(derivative(&f, 2), h.pow(3).unwrap());
    }
}
