use serde_json::{json, Value};

use orbitclass::cohomology::{
    codim_matrix_orbit, degree_of_class, degree_uniform, gkm_check, localize_ut_class, multidegree,
    uniform_class_grassmannian, uniform_class_omega,
};
use orbitclass::kclass::{
    dep_polynomial_as_printed, dep_polynomial_report, fakedep_hooks, hilbert_coefficient,
    hook_coefficient, hook_enumerator_fakedep, hook_theorem_report, k_rank2,
    k_rank2_closed_form_as_printed, k_uniform_rank2,
};
use orbitclass::matroid::{elements, mask_of, Matroid, RationalMatrix};
use orbitclass::oracle::{
    buchberger, ideal_report, idoubleprime_generators, iprime_generators, membership_test,
    minors_ideal, IdealPresentation, DEFAULT_STEP_CAP,
};
use orbitclass::symfunc::SchurExpansion;
use orbitclass::tensor::{
    char_rank2, char_uniform_rank2, dual_gl_dimension, expansion_coefficients,
    hook_generating_identity, schur_weyl_module, sn_multiplicities, MAX_ORACLE_N,
};
use orbitclass::verify::{run_all, Level};

use crate::job::{InputSpec, JobSpec};
use crate::CliError;

pub const DEFAULT_SEED: u64 = 20_240_611;
pub const CAP_ENV: &str = "ORBITCLASS_CAP_STEPS";

/// Output document plus whether the run counts as a failure (only `verify`).
pub struct Output {
    pub doc: Value,
    pub failed: bool,
}

impl From<Value> for Output {
    fn from(doc: Value) -> Self {
        Output { doc, failed: false }
    }
}

pub fn run(job: &JobSpec) -> Result<Output, CliError> {
    match job.subcommand.as_str() {
        "kclass" => kclass(job).map(Into::into),
        "cohom" => cohom(job).map(Into::into),
        "tensor" => tensor(job).map(Into::into),
        "matroid" => matroid(job).map(Into::into),
        "hooks" => hooks(job).map(Into::into),
        "ideal" => ideal(job).map(Into::into),
        "member" => member(job).map(Into::into),
        "verify" => verify(job),
        other => Err(CliError::Usage(format!("unknown subcommand `{other}`"))),
    }
}

fn step_cap(job: &JobSpec) -> Result<usize, CliError> {
    if let Some(c) = job.options.cap_steps {
        return Ok(c);
    }
    match std::env::var(CAP_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{CAP_ENV}={s} is not a step count"))),
        Err(_) => Ok(DEFAULT_STEP_CAP),
    }
}

fn expansion_json(e: &SchurExpansion) -> Value {
    json!({"r": e.r(), "n": e.n(), "terms": e.to_json_terms(), "text": e.to_string()})
}

fn one_indexed(mask: u32) -> Vec<usize> {
    elements(mask).into_iter().map(|e| e + 1).collect()
}

fn beta_vec(mask: u32, n: usize) -> Vec<u32> {
    (0..n).map(|j| mask >> j & 1).collect()
}

/// The K-class and the engine that produced it.
fn k_class(job: &JobSpec, input: &InputSpec) -> Result<(SchurExpansion, &'static str), CliError> {
    if let InputSpec::Uniform([2, n]) = input {
        return Ok((k_uniform_rank2(*n)?, "uniform-rank2-formula"));
    }
    if let Some(cfg) = input.rank2()? {
        return Ok((k_rank2(&cfg)?, "parallel-extension"));
    }
    let v = input.realization()?;
    let gb = buchberger(&iprime_generators(&v)?, step_cap(job)?)?;
    Ok((gb.k_polynomial()?, "groebner-oracle"))
}

fn kclass(job: &JobSpec) -> Result<Value, CliError> {
    let input = job.input()?;
    let (e, engine) = k_class(job, input)?;
    let mut doc = expansion_json(&e);
    doc["engine"] = json!(engine);
    if let (Some(k), Some(beta)) = (job.options.k, &job.options.beta) {
        doc["hook_coefficient"] =
            json!({"k": k, "beta": beta, "value": hook_coefficient(&e, k, beta)?.to_string()});
    }
    if job.options.as_printed {
        if let Some(cfg) = input.rank2()? {
            let (printed, report) = k_rank2_closed_form_as_printed(&cfg)?;
            doc["as_printed"] =
                json!({"closed_form": expansion_json(&printed), "discrepancies": report});
        }
    }
    Ok(doc)
}

fn cohom(job: &JobSpec) -> Result<Value, CliError> {
    let input = job.input()?;
    if let InputSpec::Uniform([r, n]) = input {
        let (r, n) = (*r, *n);
        let class = uniform_class_grassmannian(r, n)?;
        let loc = localize_ut_class(&class.section_form)?;
        let pairs: Vec<Value> = class
            .grassmannian
            .iter()
            .map(|(s, q)| json!({"sub_dual": s.lambda, "quotient": q.lambda}))
            .collect();
        let mut doc = json!({
            "r": r,
            "n": n,
            "grassmannian": pairs,
            "class": expansion_json(&class.section_form),
            "display_form": expansion_json(&class.ut_form),
            "display_within_box": class.ut_form == class.section_form,
            "degree": degree_of_class(&class.section_form).to_string(),
            "localization": loc.to_json(),
            "gkm": gkm_check(&loc),
        });
        if job.options.as_printed {
            doc["as_printed"] = json!({
                "omega_form_agrees": uniform_class_omega(r, n)? == class.ut_form,
                "degree": degree_uniform(r, n)?.to_string(),
            });
        }
        return Ok(doc);
    }
    let m = input.matroid()?;
    let (k, engine) = k_class(job, input)?;
    let (r, _) = input.arity();
    let codim = codim_matrix_orbit(&m, r)?;
    let class = multidegree(&k, codim)?;
    let mut doc = json!({
        "engine": engine,
        "codim": codim,
        "class": expansion_json(&class),
        "degree": degree_of_class(&class).to_string(),
    });
    if m.rank() == r && r >= 1 {
        let loc = localize_ut_class(&class)?;
        doc["localization"] = loc.to_json();
        doc["gkm"] = json!(gkm_check(&loc));
    }
    Ok(doc)
}

fn tensor(job: &JobSpec) -> Result<Value, CliError> {
    let input = job.input()?;
    let (_, n) = input.arity();
    let beta = job.options.beta.clone().unwrap_or_else(|| vec![1; n]);
    if beta.len() != n {
        return Err(orbitclass::Error::SizeMismatch(beta.len(), n).into());
    }
    let ones = beta.iter().all(|&b| b == 1);
    let (character, source) = match (input, input.rank2()?) {
        (InputSpec::Uniform([2, n]), _) if ones => {
            (char_uniform_rank2(*n)?, "uniform-rank2-formula")
        }
        (InputSpec::Mu { parts, zeros: 0 }, _) if ones => (
            char_rank2(&orbitclass::symfunc::Partition::from_unsorted(
                parts.clone(),
            ))?,
            "rank2-formula",
        ),
        (_, Some(cfg)) => (
            hilbert_coefficient(&k_rank2(&cfg)?, &beta)?,
            "hilbert-coefficient",
        ),
        (_, None) => {
            let (k, _) = k_class(job, input)?;
            (hilbert_coefficient(&k, &beta)?, "hilbert-coefficient")
        }
    };
    let multiplicities: Vec<Value> = expansion_coefficients(&character)
        .iter()
        .map(|(l, c)| json!({"lambda": l, "multiplicity": c.to_string()}))
        .collect();
    let mut doc = json!({
        "beta": beta,
        "source": source,
        "character": multiplicities,
        "text": character.to_string(),
        "dimension": character.dimension().to_string(),
    });
    if ones && n <= MAX_ORACLE_N {
        if let Ok(v) = input.realization() {
            let module = schur_weyl_module(&v)?;
            let mult = sn_multiplicities(&module)?;
            doc["oracle"] = json!({
                "agrees": mult == expansion_coefficients(&character),
                "multiplicities": mult.iter().map(|(l, c)| json!({"lambda": l, "multiplicity": c.to_string()})).collect::<Vec<_>>(),
                "symmetric_group_dimension": module.dimension(),
                "dual_dimension": dual_gl_dimension(&module)?.to_string(),
            });
        }
    }
    Ok(doc)
}

fn matroid_json(m: &Matroid) -> Value {
    serde_json::to_value(m).unwrap_or(Value::Null)
}

fn matroid(job: &JobSpec) -> Result<Value, CliError> {
    let m = job.input()?.matroid()?;
    let tutte = m.tutte();
    let nbc: Option<Vec<Value>> = if m.is_loopless() {
        Some(
            (1..=m.rank())
                .map(|k| Ok(json!({"k": k, "count": m.nbc_bases_of_truncation(k)?})))
                .collect::<Result<_, orbitclass::Error>>()?,
        )
    } else {
        None
    };
    let mut doc = json!({
        "matroid": matroid_json(&m),
        "loops": m.loops().iter().map(|e| e + 1).collect::<Vec<_>>(),
        "coloops": m.coloops().iter().map(|e| e + 1).collect::<Vec<_>>(),
        "components": m.connected_components().into_iter().map(one_indexed).collect::<Vec<_>>(),
        "parallel_classes": m.parallel_classes().into_iter().map(one_indexed).collect::<Vec<_>>(),
        "rank_partition": m.rank_partition(),
        "tutte": {
            "text": tutte.to_string(),
            "terms": tutte.terms().map(|(&(i, j), c)| json!({"x": i, "y": j, "coeff": c.to_string()})).collect::<Vec<_>>(),
        },
        "nbc": nbc,
        "dual": matroid_json(&m.dual()),
    });
    if let Some(flag) = &job.options.flag {
        let masks: Vec<u32> = flag
            .iter()
            .map(|s| {
                if s.iter().any(|&e| e == 0 || e > m.n()) {
                    return Err(CliError::Usage(format!(
                        "flag member {s:?} leaves 1..={}",
                        m.n()
                    )));
                }
                Ok(mask_of(&s.iter().map(|e| e - 1).collect::<Vec<_>>()))
            })
            .collect::<Result<_, _>>()?;
        doc["face"] = matroid_json(&m.face_matroid(&masks)?);
    }
    Ok(doc)
}

fn hooks(job: &JobSpec) -> Result<Value, CliError> {
    let input = job.input()?;
    let m = input.matroid()?;
    let n = m.n();
    let max_k = job.options.k.unwrap_or(n);
    let table = fakedep_hooks(&m, max_k)?;
    let rows: Vec<Value> = table
        .iter()
        .map(|(&(b, k), c)| json!({"beta": beta_vec(b, n), "k": k, "value": c.to_string()}))
        .collect();
    let mut doc = json!({
        "enumerator": hook_enumerator_fakedep(&m).to_string(),
        "hooks": rows,
    });
    if m.is_loopless() {
        let (lhs, rhs) = hook_generating_identity(&m)?;
        doc["generating_identity"] = json!({
            "nbc_side": lhs.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "tutte_side": rhs.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "holds": lhs == rhs,
        });
    }
    if let Some(cfg) = input.rank2()? {
        let e = k_rank2(&cfg)?;
        let mut agrees = true;
        for b in 1u32..1 << n {
            for k in 1..=max_k.min(b.count_ones() as usize) {
                let engine = hook_coefficient(&e, k, &beta_vec(b, n))?;
                agrees &= engine == table.get(&(b, k)).cloned().unwrap_or_default();
            }
        }
        doc["engine_agrees"] = json!(agrees);
    }
    if job.options.as_printed {
        doc["as_printed"] = json!({
            "dep_polynomial": dep_polynomial_as_printed(&m).to_string(),
            "dep_report": dep_polynomial_report(&m)?,
            "hook_statement_report": hook_theorem_report(&m, max_k)?,
        });
    }
    Ok(doc)
}

fn ideal(job: &JobSpec) -> Result<Value, CliError> {
    let input = job.input()?;
    let kind = job.options.kind.as_deref().unwrap_or("iprime");
    let presentation: IdealPresentation = match kind {
        "iprime" => iprime_generators(&input.realization()?)?,
        "idoubleprime" => idoubleprime_generators(&input.realization()?)?,
        "minors" => {
            let (r, n) = input.arity();
            let size = job
                .options
                .size
                .ok_or_else(|| CliError::Usage("--kind minors needs --size".into()))?;
            minors_ideal(r, n, size)?
        }
        other => return Err(CliError::Usage(format!("unknown ideal kind `{other}`"))),
    };
    Ok(serde_json::to_value(ideal_report(
        &presentation,
        step_cap(job)?,
    )?)?)
}

fn member(job: &JobSpec) -> Result<Value, CliError> {
    let need = |m: &Option<RationalMatrix>, which: &str| {
        m.clone()
            .ok_or_else(|| CliError::Usage(format!("member needs --{which}")))
    };
    let (v, w) = (need(&job.options.v, "v")?, need(&job.options.w, "w")?);
    Ok(json!({"member": membership_test(&w, &v)?}))
}

fn verify(job: &JobSpec) -> Result<Output, CliError> {
    let level: Level = job.options.level.as_deref().unwrap_or("full").parse()?;
    let seed = job.options.seed.unwrap_or(DEFAULT_SEED);
    let reports = run_all(seed, level);
    let passed = reports.iter().all(|r| r.passed);
    let doc = json!({
        "seed": seed,
        "level": job.options.level.as_deref().unwrap_or("full"),
        "passed": passed,
        "criteria": reports,
    });
    Ok(Output {
        doc,
        failed: !passed,
    })
}
