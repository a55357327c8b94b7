use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use incidence_core::checks::{check_poset, check_table, CheckConfig, CheckOutcome};
use incidence_core::dot;
use incidence_core::ideal::enumerate_ideals;
use incidence_core::poset::corpus::Corpus;
use incidence_core::poset::GammaPoset;
use incidence_core::presented::confluence_probe;
use incidence_core::recovery::{recover_order_a, recover_order_b};
use incidence_core::{
    Convention, IdealError, IncidenceAlgebra, MultiplicationTable, Poset,
    RewriteSystem, TripleConvention,
};
use serde_json::json;

use crate::{Command, ConventionArg, ExportKind, Format, TripleArg};

pub fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Info { input } => info(&read_poset(&input)?),
        Command::Ideals { input, cap, format } => ideals(&read_poset(&input)?, cap, format),
        Command::Check {
            input,
            corpus,
            table,
            seed,
            cap,
        } => {
            let config = CheckConfig {
                seeds: (1..=5).map(|k| seed.wrapping_add(k)).collect(),
                enumeration_cap: cap,
                seed,
                ..CheckConfig::default()
            };
            match (input, corpus, table) {
                (Some(path), None, None) => check_posets(&[read_poset(&path)?], &config),
                (None, Some(name), None) => {
                    let Some(corpus) = Corpus::from_name(&name) else {
                        bail!("unknown corpus `{name}` (expected exhaustive4 or random7)");
                    };
                    check_posets(&corpus.posets(), &config)
                }
                (None, None, Some(path)) => {
                    let outcomes = check_table(&read_table(&path)?);
                    Ok(report(&outcomes, None))
                }
                _ => bail!("give exactly one of --input, --corpus, --table"),
            }
        }
        Command::Recover {
            input,
            format,
            output,
        } => recover(&read_table(&input)?, format, output.as_deref()),
        Command::Export {
            input,
            what,
            convention,
            seed,
            no_rescale,
            cap,
            output,
        } => {
            let poset = read_poset(&input)?;
            let convention = match convention {
                ConventionArg::Reflexive => Convention::Reflexive,
                ConventionArg::Irreflexive => Convention::Irreflexive,
            };
            let text = match what {
                ExportKind::Hasse => dot::hasse(&poset),
                ExportKind::Gamma => dot::gamma(&poset),
                ExportKind::IdealLattice => {
                    lattice(&IncidenceAlgebra::build(&poset, convention), cap)?
                }
                ExportKind::Table => {
                    let table = IncidenceAlgebra::build(&poset, convention).multiplication_table();
                    match seed {
                        Some(s) => table.scramble(s, !no_rescale).to_json(),
                        None => table.to_json(),
                    }
                }
            };
            emit(&text, output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Presented {
            input,
            triple,
            max_degree,
            word,
            probe,
        } => {
            let poset = read_poset(&input)?;
            let convention = match triple {
                TripleArg::AllowRepeats => TripleConvention::AllowRepeats,
                TripleArg::DistinctOnly => TripleConvention::DistinctOnly,
            };
            presented(&poset, convention, max_degree, word.as_deref(), probe)
        }
    }
}

fn read_poset(path: &Path) -> Result<Poset> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Poset::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_table(path: &Path) -> Result<MultiplicationTable> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    MultiplicationTable::from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cap_hint(e: IdealError) -> anyhow::Error {
    match e {
        IdealError::CapExceeded { required, .. } => anyhow::anyhow!("{e}; rerun with --cap {required}"),
        other => other.into(),
    }
}

fn lattice(algebra: &IncidenceAlgebra, cap: usize) -> Result<String> {
    if algebra.dim() > cap {
        return Err(cap_hint(IdealError::CapExceeded { required: algebra.dim(), cap }));
    }
    dot::ideal_lattice(algebra, cap).map_err(|e| match e {
        IdealError::CapExceeded { required, cap } => {
            anyhow::anyhow!("{required} ideals; the lattice export is limited to {cap}")
        }
        other => other.into(),
    })
}

fn info(poset: &Poset) -> Result<ExitCode> {
    let reflexive = IncidenceAlgebra::build(poset, Convention::Reflexive);
    let irreflexive = IncidenceAlgebra::build(poset, Convention::Irreflexive);
    println!(
        "n={}, generators(reflexive)={}, generators(irreflexive)={}, strict-pairs={}, longest-chain={}, covers={}",
        poset.len(),
        reflexive.dim(),
        irreflexive.dim(),
        poset.strict_pair_count(),
        poset.longest_chain(),
        poset.covers().len()
    );
    Ok(ExitCode::SUCCESS)
}

fn ideals(poset: &Poset, cap: usize, format: Format) -> Result<ExitCode> {
    let algebra = IncidenceAlgebra::build(poset, Convention::Reflexive);
    if format == Format::Dot {
        print!("{}", lattice(&algebra, cap)?);
        return Ok(ExitCode::SUCCESS);
    }
    let mut rows = Vec::new();
    for ideal in enumerate_ideals(&algebra, cap).map_err(cap_hint)? {
        let mut flags = Vec::new();
        if ideal.is_zero() {
            flags.push("zero");
        }
        if ideal.is_indecomposable() {
            flags.push("indecomposable");
        }
        if ideal.is_maximal_indecomposable() {
            flags.push("maximal-indecomposable");
        }
        if ideal.is_maximal() {
            flags.push("maximal");
        }
        rows.push((ideal.render(), flags));
    }
    let tally = |flag: &str| rows.iter().filter(|(_, f)| f.contains(&flag)).count();
    match format {
        Format::Json => {
            let list: Vec<_> = rows
                .iter()
                .map(|(ideal, flags)| json!({ "ideal": ideal, "flags": flags }))
                .collect();
            let doc = json!({
                "total": rows.len(),
                "indecomposable": tally("indecomposable"),
                "maximal_indecomposable": tally("maximal-indecomposable"),
                "maximal": tally("maximal"),
                "ideals": list,
            });
            println!("{doc}");
        }
        _ => {
            for (ideal, flags) in &rows {
                if flags.is_empty() {
                    println!("{ideal}");
                } else {
                    println!("{ideal}  {}", flags.join(" "));
                }
            }
            println!(
                "total={} indecomposable={} maximal-indecomposable={} maximal={}",
                rows.len(),
                tally("indecomposable"),
                tally("maximal-indecomposable"),
                tally("maximal")
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn check_posets(posets: &[Poset], config: &CheckConfig) -> Result<ExitCode> {
    let mut all = Vec::new();
    let mut failures = Vec::new();
    for poset in posets {
        for outcome in check_poset(poset, config) {
            if outcome.failed() {
                failures.push((poset.to_text(), outcome.clone()));
            }
            all.push(outcome);
        }
    }
    for (text, outcome) in &failures {
        println!("{outcome}");
        println!("  on: {}", text.trim_end().replace('\n', "; "));
    }
    Ok(report(&all, Some(posets.len())))
}

/// Prints a per-check tally and returns exit code 1 when anything failed.
fn report(outcomes: &[CheckOutcome], posets: Option<usize>) -> ExitCode {
    let mut tally: BTreeMap<&str, [usize; 3]> = BTreeMap::new();
    let mut order = Vec::new();
    for o in outcomes {
        let slot = tally.entry(o.name).or_insert_with(|| {
            order.push(o.name);
            [0; 3]
        });
        match o.passed {
            Some(true) => slot[0] += 1,
            Some(false) => slot[1] += 1,
            None => slot[2] += 1,
        }
    }
    if posets.is_none() {
        for o in outcomes {
            println!("{o}");
        }
    } else {
        for name in &order {
            let [pass, fail, skip] = tally[name];
            let verdict = if fail > 0 { "FAIL" } else { "pass" };
            println!("{verdict} {name}: {pass} passed, {fail} failed, {skip} skipped");
        }
    }
    let failed = outcomes.iter().filter(|o| o.failed()).count();
    match posets {
        Some(n) => println!("{n} posets, {failed} failures"),
        None => println!("{failed} failures"),
    }
    if failed > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn recover(table: &MultiplicationTable, format: Format, output: Option<&Path>) -> Result<ExitCode> {
    table.check_associativity()?;
    let a = recover_order_a(table).context("order route")?;
    let b = recover_order_b(table).context("link route")?;
    let text = match format {
        Format::Dot => dot::hasse(&a),
        Format::Json => {
            let relations: Vec<_> = a
                .strict_pairs()
                .map(|p| json!([a.label(p.x), a.label(p.y)]))
                .collect();
            format!(
                "{}\n",
                json!({ "elements": a.labels(), "relations": relations, "routes_agree": a == b })
            )
        }
        Format::Text => {
            let mut s = format!(
                "# recovered {} elements from a table of dimension {}\n",
                a.len(),
                table.dim()
            );
            if a == b {
                s.push_str("# order route and link route agree\n");
            } else {
                s.push_str("# routes disagree; link route gives:\n");
                for line in b.to_text().lines() {
                    s.push_str(&format!("#   {line}\n"));
                }
            }
            s.push_str(&a.to_text());
            s
        }
    };
    emit(&text, output)?;
    if a == b {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn presented(
    poset: &Poset,
    convention: TripleConvention,
    max_degree: usize,
    word: Option<&str>,
    probe: Option<usize>,
) -> Result<ExitCode> {
    let sys = RewriteSystem::build(poset, convention);
    if let Some(text) = word {
        let w = sys.parse_word(text)?;
        let nf = sys.reduce_word(&w)?;
        println!("{}", sys.format(&nf));
        let forms = sys.all_normal_forms(&w);
        if forms.len() > 1 {
            let all: Vec<String> = forms.iter().map(|f| sys.format(f)).collect();
            println!("# other rewrite orders reach: {}", all.join(", "));
        }
        return Ok(ExitCode::SUCCESS);
    }
    println!("# {} rules ({:?})", sys.rule_strings().len(), convention);
    for rule in sys.rule_strings() {
        println!("#   {rule}");
    }
    println!("degree\tdim");
    for (d, count) in sys.dimension_up_to(max_degree)?.iter().enumerate() {
        println!("{}\t{count}", d + 1);
    }
    let gamma = GammaPoset::new(poset);
    println!("# incidence algebra dimension {}", gamma.len());
    if let Some(len) = probe {
        let r = confluence_probe(std::slice::from_ref(poset), convention, len);
        println!(
            "# probe: {} words, {} order-dependent",
            r.words_checked,
            r.witnesses.len()
        );
        for w in r.witnesses.iter().take(5) {
            println!("#   {w}");
        }
    }
    Ok(ExitCode::SUCCESS)
}
