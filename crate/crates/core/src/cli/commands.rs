use num_bigint::BigInt;
use num_traits::One;
use serde_json::Value;

use super::json::{self, PayloadError};
use super::{Command, JobSpec, MAX_PRECISION};
use crate::exact::{charpoly, det_exact, IntMatrix, Prime, RatMatrix, RatVector, Rational};
use crate::factor::hensel_split;
use crate::groups::{InductivePrefix, StationaryPresentation};
use crate::padic::{PadicMatrix, PadicNorm, PadicPoly};
use crate::quasi::{adjoin_element, power_congruence, quasi_to_stationary, IncreasingPresentation, QuasiIsoData};
use crate::Error;

pub enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<PayloadError> for Failure {
    fn from(e: PayloadError) -> Self {
        Failure::Usage(e.0)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Out = Result<Value, Failure>;

fn precision(n: Option<u32>, default: u32) -> Result<u32, Failure> {
    let n = n.unwrap_or(default);
    if !(1..=MAX_PRECISION).contains(&n) {
        return Err(Failure::Usage(format!("precision must lie in 1..={MAX_PRECISION}, got {n}")));
    }
    Ok(n)
}

fn presentation(text: &str) -> Result<StationaryPresentation, Failure> {
    Ok(StationaryPresentation::new(json::int_matrix(&json::parse(text)?)?)?)
}

fn vector(text: &str) -> Result<RatVector, Failure> {
    Ok(json::rat_vector(&json::parse(text)?)?)
}

fn with_verify(mut v: Value, verify: Option<Value>) -> Value {
    if let (Value::Object(map), Some(check)) = (&mut v, verify) {
        map.insert("verify".into(), check);
    }
    v
}

fn ring_header(p: Prime, n: u32) -> [(&'static str, Value); 2] {
    [("p", p.get().into()), ("N", n.into())]
}

pub fn execute(spec: &JobSpec, default_precision: u32) -> Out {
    let verify = spec.verify;
    match &spec.command {
        Command::Charpoly { matrix } => {
            let a = json::int_matrix(&json::parse(matrix)?)?;
            let coeffs = charpoly(&a)?;
            let det = det_exact(&a)?;
            let check = verify.then(|| {
                // det A = (−1)^r·α_r
                let r = coeffs.len() - 1;
                let sign = if r % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                json::object([("agree", (sign * &coeffs[r] == det).into())])
            });
            Ok(with_verify(json::object([("charpoly", json::int_list(&coeffs)), ("det", json::int(&det))]), check))
        }
        Command::Divisible { matrix, p } => {
            let pres = presentation(matrix)?;
            let p = Prime::new(*p)?;
            let w = pres.is_p_divisible(p);
            let check = verify.then(|| -> Result<Value, Failure> {
                let mut all = true;
                for i in 0..pres.rank() {
                    let v = RatVector::unit(pres.rank(), i).scale(&Rational::new(BigInt::one(), p.to_bigint()));
                    let bound = pres.iteration_bound(&v)?;
                    all &= pres.certificate_search(&v, bound).is_some();
                }
                let power_ok = w
                    .witness_power
                    .is_none_or(|n| pres.matrix().pow_mod(n, &p.to_bigint()).is_zero());
                Ok(json::object([
                    ("unit_vectors_divisible", all.into()),
                    ("agree", (all == w.divisible && power_ok).into()),
                ]))
            });
            let out = json::object([
                ("divisible", w.divisible.into()),
                ("witness_power", w.witness_power.map_or(Value::Null, Value::from)),
            ]);
            Ok(with_verify(out, check.transpose()?))
        }
        Command::UnitSplit { input, p, precision: n } => {
            let v = json::parse(input)?;
            let chi = if json::is_matrix(&v) {
                charpoly(&json::int_matrix(&v)?)?
            } else {
                let coeffs = v.as_array().ok_or_else(|| Failure::Usage("expected a matrix or a coefficient list".into()))?;
                coeffs.iter().map(json::integer).collect::<Result<Vec<_>, _>>()?
            };
            let p = Prime::new(*p)?;
            let n = precision(*n, default_precision)?;
            let s = hensel_split(&chi, p, n)?;
            let desc = |f: &PadicPoly| json::uint_list(&f.descending());
            let check = verify.then(|| {
                let f = PadicPoly::from_descending(s.ring(), &chi);
                let ok = s.chi1().mul(s.chi0()) == f
                    && s.u().mul(s.chi1()).add(&s.v().mul(s.chi0())) == PadicPoly::one(s.ring());
                json::object([("agree", ok.into())])
            });
            let [hp, hn] = ring_header(p, n);
            let out = json::object([
                hp,
                hn,
                ("k", s.unit_root_count().into()),
                ("chi1", desc(s.chi1())),
                ("chi0", desc(s.chi0())),
                ("u", desc(s.u())),
                ("v", desc(s.v())),
            ]);
            Ok(with_verify(out, check))
        }
        Command::Functionals { matrix, p, precision: n } => {
            let pres = presentation(matrix)?;
            let p = Prime::new(*p)?;
            let n = precision(*n, default_precision)?;
            let basis = pres.functionals_basis(p, n)?;
            let rows = basis.rows();
            let check = verify.then(|| -> Result<Value, Failure> {
                let a = PadicMatrix::from_int(basis.ring(), pres.matrix());
                let chi1 = basis.split().chi1().eval_matrix(&a)?;
                let mut ok = basis.rank() == pres.pro_p_corank(p);
                for w in &rows {
                    ok &= w.mul_matrix(&chi1)?.is_zero();
                }
                Ok(json::object([("agree", ok.into())]))
            });
            let [hp, hn] = ring_header(p, n);
            let out = json::object([
                hp,
                hn,
                ("rank", basis.rank().into()),
                ("rows", Value::Array(rows.iter().map(|w| json::uint_list(w.entries())).collect())),
            ]);
            Ok(with_verify(out, check.transpose()?))
        }
        Command::Dp { matrix, g, h, p, precision: n } => {
            let pres = presentation(matrix)?;
            let p = Prime::new(*p)?;
            let n = precision(*n, default_precision)?;
            let (g, h) = (vector(g)?, vector(h)?);
            let ge = pres.member(&g, n)?.ok_or(Error::NotMember)?;
            let he = pres.member(&h, n)?.ok_or(Error::NotMember)?;
            let d = pres.dp_distance(p, n, &ge, &he)?;
            let check = verify.then(|| -> Result<Value, Failure> {
                let oracle = dp_by_iteration(&pres, p, n, &(&g - &h))?;
                Ok(json::object([("iteration", oracle.to_string().into()), ("agree", (oracle == d).into())]))
            });
            let [hp, hn] = ring_header(p, n);
            Ok(with_verify(json::object([hp, hn, ("distance", d.to_string().into())]), check.transpose()?))
        }
        Command::Member { matrix, vector: v, precision: n } => {
            let pres = presentation(matrix)?;
            let n = precision(*n, default_precision)?;
            let v = vector(v)?;
            let found = pres.member(&v, n)?;
            let check = verify.then(|| -> Result<Value, Failure> {
                let iter = pres.certificate_search(&v, pres.iteration_bound(&v)?);
                let agree = iter == found.as_ref().and_then(|g| g.certificate());
                Ok(json::object([
                    ("iteration_certificate", iter.map_or(Value::Null, Value::from)),
                    ("agree", agree.into()),
                ]))
            });
            let out = match &found {
                Some(g) => json::object([
                    ("member", true.into()),
                    ("certificate", g.certificate().map_or(Value::Null, Value::from)),
                ]),
                None => json::object([("member", false.into())]),
            };
            Ok(with_verify(out, check.transpose()?))
        }
        Command::Corank { matrix, p } => {
            let pres = presentation(matrix)?;
            let p = Prime::new(*p)?;
            let k = pres.pro_p_corank(p);
            let check = verify.then(|| -> Result<Value, Failure> {
                let rank = pres.functionals_basis(p, 4)?.rank();
                Ok(json::object([("functional_rank", rank.into()), ("agree", (rank == k).into())]))
            });
            Ok(with_verify(json::object([("p", p.get().into()), ("corank", k.into())]), check.transpose()?))
        }
        Command::LimitApprox { matrices, p, precision: n, stage } => {
            let v = json::parse(matrices)?;
            let list = v.as_array().ok_or_else(|| Failure::Usage("expected a list of matrices".into()))?;
            let mats: Vec<IntMatrix> = list.iter().map(json::int_matrix).collect::<Result<_, _>>()?;
            let rank = mats.first().map_or(0, IntMatrix::rows);
            let prefix = InductivePrefix::new(rank, mats)?;
            let p = Prime::new(*p)?;
            let n = precision(*n, default_precision)?;
            let module = prefix.limit_prefix_functionals(p, n, *stage)?;
            let check = verify.then(|| -> Result<Value, Failure> {
                let nested = match stage.checked_sub(1) {
                    Some(prev) => module.is_submodule_of(&prefix.limit_prefix_functionals(p, n, prev)?),
                    None => true,
                };
                Ok(json::object([("agree", nested.into())]))
            });
            let [hp, hn] = ring_header(p, n);
            let rows = module.rows().iter().map(|r| json::uint_list(r)).collect();
            let out = json::object([hp, hn, ("stage", (*stage).into()), ("rows", Value::Array(rows))]);
            Ok(with_verify(out, check.transpose()?))
        }
        Command::PowerCongruence { matrix, modulus } => {
            let b = json::int_matrix(&json::parse(matrix)?)?;
            let m = json::integer(&json::parse(modulus)?)?;
            let (k, l) = power_congruence(&b, &m)?;
            let check = verify.then(|| {
                let ok = (&b.pow_mod(k, &m) - &b.pow_mod(l, &m)).divisible_by(&m);
                json::object([("agree", ok.into())])
            });
            Ok(with_verify(json::object([("k", k.into()), ("l", l.into())]), check))
        }
        Command::Adjoin { presentation: text, vector: z, precision: n } => {
            let n = precision(*n, default_precision)?;
            let v = json::parse(text)?;
            let input = if json::is_matrix(&v) {
                IncreasingPresentation::from_stationary(&StationaryPresentation::new(json::int_matrix(&v)?)?)?
            } else {
                increasing(&v)?
            };
            let z = vector(z)?;
            let adj = adjoin_element(&input, &z)?;
            let check = verify.then(|| -> Result<Value, Failure> {
                let mut ok = adj.presentation.contains(&z, n)?.is_some();
                for g in input.basis().row_vectors() {
                    ok &= adj.presentation.contains(&g, n)?.is_some();
                }
                Ok(json::object([("agree", ok.into())]))
            });
            let out = json::object([
                ("matrix", json::int_matrix_value(adj.stationary.matrix())),
                ("basis", json::rat_matrix_value(adj.presentation.basis())),
                ("alpha", json::rat_matrix_value(adj.presentation.alpha())),
                ("m", json::int(&adj.m)),
                ("l1", adj.l1.into()),
                ("l2", adj.l2.into()),
                ("k", adj.k.into()),
            ]);
            Ok(with_verify(out, check.transpose()?))
        }
        Command::QuasiRebuild { h, quasi_data, reps, precision: n } => {
            let n = precision(*n, default_precision)?;
            let h = presentation(h)?;
            let q = quasi(&json::parse(quasi_data)?)?;
            let reps: Vec<RatVector> = reps.iter().map(|r| vector(r)).collect::<Result<_, _>>()?;
            let (inc, stat) = quasi_to_stationary(&h, &q, &reps, n)?;
            let check = verify.then(|| -> Result<Value, Failure> {
                let mut ok = true;
                for z in reps.iter().cloned().chain(q.beta().transpose().row_vectors()) {
                    ok &= inc.contains(&z, n)?.is_some();
                }
                Ok(json::object([("agree", ok.into())]))
            });
            let out = json::object([
                ("matrix", json::int_matrix_value(stat.matrix())),
                ("basis", json::rat_matrix_value(inc.basis())),
                ("alpha", json::rat_matrix_value(inc.alpha())),
            ]);
            Ok(with_verify(out, check.transpose()?))
        }
        Command::Batch { .. } => Err(Failure::Usage("batch runs only at top level".into())),
    }
}

fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value, Failure> {
    v.get(name).ok_or_else(|| Failure::Usage(format!("missing field {name:?}")))
}

fn increasing(v: &Value) -> Result<IncreasingPresentation, Failure> {
    let basis = json::rat_matrix(field(v, "basis")?)?;
    let alpha = json::rat_matrix(field(v, "alpha")?)?;
    Ok(IncreasingPresentation::new(basis, alpha)?)
}

fn quasi(v: &Value) -> Result<QuasiIsoData, Failure> {
    let n = json::integer(field(v, "n")?)?;
    let alpha: RatMatrix = json::rat_matrix(field(v, "alpha")?)?;
    let beta = json::rat_matrix(field(v, "beta")?)?;
    Ok(QuasiIsoData::new(n, alpha, beta)?)
}

/// Largest `j ≤ N` with `x/pʲ ∈ G`, decided by bounded iteration alone.
fn dp_by_iteration(pres: &StationaryPresentation, p: Prime, n: u32, x: &RatVector) -> Result<PadicNorm, Failure> {
    let mut best = 0;
    for j in 1..=n {
        let scaled = x.scale(&Rational::new(BigInt::one(), p.to_bigint().pow(j)));
        if pres.certificate_search(&scaled, pres.iteration_bound(&scaled)?).is_none() {
            break;
        }
        best = j;
    }
    Ok(if best == n { PadicNorm::at_most(p, n as i64) } else { PadicNorm::exact(p, best as i64) })
}
