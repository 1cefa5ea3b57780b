use num_traits::Signed;
use serde::Serialize;
use serde_json::Value;

use gcflab::exact::parse_rational;
use gcflab::gcf::{self, GcfInput, QuadraticForm};
use gcflab::numeric::format_real;
use gcflab::raney::{self, enumerate_states, Config, LrRuns};
use gcflab::rcf::{self, LetterEncoding};
use gcflab::substitution::{stammer_scan, NumericAssignment, Substitution};
use gcflab::Integer;

use crate::output::{csv_table, json_line, number, Failure, Field, Rendered};
use crate::{Form, Format, InputArgs};

type Outcome = Result<Rendered, Failure>;

fn tabular(format: Format, command: &str) -> Result<(), Failure> {
    if format == Format::Dot {
        return Err(Failure::usage(
            "--format",
            format!("dot is not available for {command}"),
        ));
    }
    Ok(())
}

fn rule(text: &str) -> Result<Substitution<char>, Failure> {
    text.parse().field("--rule")
}

fn assignment(text: &str) -> Result<NumericAssignment<char>, Failure> {
    text.parse().field("--assign")
}

fn has_value(values: &NumericAssignment<char>, letter: char) -> Result<(), Failure> {
    match values.value(&letter) {
        Ok(_) => Ok(()),
        Err(_) => Err(Failure::usage(
            "--assign",
            format!("no value for letter {letter}"),
        )),
    }
}

/// Checks each flag on its own before building the input.
fn gcf_input(args: &InputArgs) -> Result<GcfInput, Failure> {
    let rule = rule(&args.rule)?;
    let values = assignment(&args.assign)?;
    for letter in rule.alphabet() {
        has_value(&values, *letter)?;
    }
    rule.fixed_point(args.seed).field("--seed")?;
    GcfInput::from_substitution(rule, args.seed, values).field("--rule")
}

#[derive(Serialize)]
struct ConvergentJson {
    n: usize,
    p: Value,
    q: Value,
    value: Value,
}

pub fn convergents(args: &InputArgs, depth: usize, format: Format) -> Outcome {
    tabular(format, "convergents")?;
    let input = gcf_input(args)?;
    let mut rows = Vec::with_capacity(depth + 1);
    for pair in input.convergents(depth) {
        rows.push(pair?);
    }
    let body = match format {
        Format::Json => rows
            .iter()
            .map(|c| {
                json_line(&ConvergentJson {
                    n: c.n,
                    p: number(&c.p),
                    q: number(&c.q),
                    value: number(format_real(&c.value())),
                })
            })
            .collect(),
        _ => csv_table(
            &["n", "p", "q", "value"],
            rows.iter().map(|c| {
                [
                    c.n.to_string(),
                    c.p.to_string(),
                    c.q.to_string(),
                    format_real(&c.value()),
                ]
            }),
        )?,
    };
    Ok(body.into())
}

pub fn diagnose(args: &InputArgs, depth: usize, format: Format) -> Outcome {
    tabular(format, "diagnose")?;
    let input = gcf_input(args)?;
    let stream = gcf::diagnostics(&input, depth).field("--depth")?;
    eprintln!("diagnostics to depth {depth}");
    let mut rows = Vec::with_capacity(depth);
    for row in stream {
        rows.push(row?);
    }
    let flagged: Vec<String> = rows
        .iter()
        .filter(|r| !r.margin_holds())
        .map(|r| r.n.to_string())
        .collect();
    if !flagged.is_empty() {
        eprintln!("margin not above 1 at n = {}", flagged.join(", "));
    }
    let mut buf = Vec::new();
    match format {
        Format::Json => gcf::write_jsonl(&rows, &mut buf)?,
        _ => gcf::write_csv(&rows, &mut buf)?,
    }
    Ok(String::from_utf8(buf).expect("UTF-8 output").into())
}

fn det_arg(det: u64) -> Result<(), Failure> {
    if det < 2 {
        return Err(Failure::usage("--det", "determinant must be at least 2"));
    }
    Ok(())
}

pub fn raney_states(det: u64, format: Format) -> Outcome {
    tabular(format, "raney states")?;
    det_arg(det)?;
    let states = enumerate_states(det).field("--det")?;
    let body = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct States {
                det: u64,
                states: Vec<String>,
            }
            json_line(&States {
                det,
                states: states.iter().map(|s| s.matrix().literal()).collect(),
            })
        }
        _ => csv_table(
            &["state", "class"],
            states
                .iter()
                .map(|s| [s.matrix().literal(), s.class().to_string()]),
        )?,
    };
    Ok(body.into())
}

pub fn raney_table(det: u64, max_input: usize, format: Format) -> Outcome {
    det_arg(det)?;
    let table = raney::derive_table(det, max_input).field("--max-input")?;
    let body = match format {
        Format::Json => format!("{}\n", table.to_json()),
        Format::Dot => table.to_dot(),
        Format::Csv => csv_table(
            &["from", "in", "out", "to"],
            table.edges.iter().map(|e| {
                [
                    e.from.matrix().literal(),
                    e.input.to_string(),
                    e.output.to_string(),
                    e.to.matrix().literal(),
                ]
            }),
        )?,
    };
    Ok(body.into())
}

pub fn raney_run(det: u64, state: &str, input: &str, format: Format) -> Outcome {
    tabular(format, "raney run")?;
    det_arg(det)?;
    let start: Config = state.parse().field("--state")?;
    if start.det().abs() != Integer::from(det) {
        return Err(Failure::usage(
            "--state",
            format!(
                "{} has determinant {}, expected ±{det}",
                start.matrix().literal(),
                start.det()
            ),
        ));
    }
    let word: LrRuns = input.parse().field("--input")?;
    let steps = raney::run_trace(&start, &word)?;
    let mut output = LrRuns::default();
    let mut rows = Vec::with_capacity(steps.len());
    for (i, step) in steps.iter().enumerate() {
        output.extend(&step.output);
        rows.push((i + 1, step, output.to_plain()));
    }
    let final_state = steps
        .last()
        .map_or_else(|| start.clone(), |s| s.config.clone());
    // Flush what the last configuration can still emit on its own.
    let (tail, final_state) = raney::emit(&final_state)?;
    output.extend(&tail);
    let body = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Step {
                step: usize,
                input: String,
                emitted: String,
                config: String,
            }
            #[derive(Serialize)]
            struct Run {
                start: String,
                input: String,
                output: String,
                r#final: String,
                trace: Vec<Step>,
            }
            json_line(&Run {
                start: start.matrix().literal(),
                input: word.to_plain(),
                output: output.to_plain(),
                r#final: final_state.matrix().literal(),
                trace: rows
                    .iter()
                    .map(|(i, s, _)| Step {
                        step: *i,
                        input: s.input.to_string(),
                        emitted: s.output.to_plain(),
                        config: s.config.matrix().literal(),
                    })
                    .collect(),
            })
        }
        _ => csv_table(
            &["step", "input", "emitted", "output", "config"],
            rows.iter()
                .map(|(i, s, so_far)| {
                    [
                        i.to_string(),
                        s.input.to_string(),
                        s.output.to_plain(),
                        so_far.clone(),
                        s.config.matrix().literal(),
                    ]
                })
                .chain((!tail.is_empty()).then(|| {
                    [
                        "end".to_string(),
                        String::new(),
                        tail.to_plain(),
                        output.to_plain(),
                        final_state.matrix().literal(),
                    ]
                })),
        )?,
    };
    eprintln!(
        "output {}, final state {}",
        output.to_plain(),
        final_state.matrix().literal()
    );
    Ok(body.into())
}

fn joined(xs: &[Integer]) -> String {
    xs.iter()
        .map(Integer::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn rcf(g: usize, assign: &str, depth: usize, crosscheck: bool, format: Format) -> Outcome {
    tabular(format, "rcf")?;
    let values = assignment(assign)?;
    for letter in ['a', 'b'] {
        has_value(&values, letter)?;
    }
    if g > 40 {
        return Err(Failure::usage(
            "--foldings",
            "generation must be at most 40",
        ));
    }
    if !crosscheck {
        let nf = rcf::folding_normal_form(g, &LetterEncoding::from_assignment(&values))
            .field("--foldings")?;
        let report = rcf::confirmed_quotients(&nf);
        let body = match format {
            Format::Json => format!("{}\n", report.to_json()),
            _ => csv_table(
                &["source", "confirmed", "next_lower_bound"],
                [[
                    report.source.to_string(),
                    joined(&report.confirmed),
                    report.next_lower_bound.to_string(),
                ]],
            )?,
        };
        return Ok(body.into());
    }
    if depth == 0 {
        return Err(Failure::usage(
            "--depth",
            "enclosure depth must be at least 1",
        ));
    }
    eprintln!("cross-check: folding generation {g}, enclosure depth {depth}");
    let check = rcf::cross_check_with(g, depth, &values)?;
    let verdict = !check.discrepancy && check.bounds_consistent;
    eprintln!(
        "{} common quotients, {}",
        check.agreed,
        if verdict { "agreement" } else { "DISAGREEMENT" }
    );
    let body = match format {
        Format::Json => format!("{}\n", check.to_json()),
        _ => csv_table(
            &[
                "source",
                "confirmed",
                "next_lower_bound",
                "agreed",
                "discrepancy",
                "bounds_consistent",
            ],
            [&check.transducer, &check.interval].map(|r| {
                [
                    r.source.to_string(),
                    joined(&r.confirmed),
                    r.next_lower_bound.to_string(),
                    check.agreed.to_string(),
                    check.discrepancy.to_string(),
                    check.bounds_consistent.to_string(),
                ]
            }),
        )?,
    };
    Ok(Rendered {
        body,
        disagreement: !verdict,
    })
}

pub fn stammer(
    rule_text: &str,
    seed: char,
    length: usize,
    exponent: &str,
    min_len: usize,
    format: Format,
) -> Outcome {
    tabular(format, "stammer")?;
    let rule = rule(rule_text)?;
    let r = parse_rational("exponent", exponent).field("--exponent")?;
    if r <= gcflab::Rational::from_integer(1.into()) {
        return Err(Failure::usage("--exponent", format!("{r} must exceed 1")));
    }
    if length == 0 {
        return Err(Failure::usage("--length", "must be at least 1"));
    }
    let prefix = rule.fixed_point_prefix(seed, length).field("--seed")?;
    let bound = rule.stammer_bound(seed, 16).field("--rule")?;
    let hits = stammer_scan(&prefix, &r, min_len)?;
    let body = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Bound {
                k: usize,
                j: usize,
                image_len: usize,
                exponent: String,
            }
            #[derive(Serialize)]
            struct Hit {
                length: usize,
                exponent: String,
            }
            #[derive(Serialize)]
            struct Report {
                scanned: usize,
                exponent: String,
                bound: Bound,
                hits: Vec<Hit>,
            }
            json_line(&Report {
                scanned: length,
                exponent: r.to_string(),
                bound: Bound {
                    k: bound.k,
                    j: bound.j,
                    image_len: bound.image_len,
                    exponent: bound.exponent.to_string(),
                },
                hits: hits
                    .iter()
                    .map(|h| Hit {
                        length: h.word.len(),
                        exponent: h.exponent.to_string(),
                    })
                    .collect(),
            })
        }
        _ => csv_table(
            &["kind", "length", "exponent"],
            std::iter::once([
                "bound".to_string(),
                bound.image_len.to_string(),
                bound.exponent.to_string(),
            ])
            .chain(hits.iter().map(|h| {
                [
                    "hit".to_string(),
                    h.word.len().to_string(),
                    h.exponent.to_string(),
                ]
            })),
        )?,
    };
    Ok(body.into())
}

pub fn quadratic(args: &InputArgs, period: usize, form: Form, format: Format) -> Outcome {
    tabular(format, "quadratic")?;
    if period == 0 {
        return Err(Failure::usage("--period", "must be at least 1"));
    }
    let input = gcf_input(args)?;
    let form = match form {
        Form::FixedPoint => QuadraticForm::FixedPoint,
        Form::ConvergentForm => QuadraticForm::ConvergentForm,
    };
    let qa = gcf::quadratic_approximant_with(&input, period, form, &gcf::root_width())
        .field("--period")?;
    let c = &qa.coefficients;
    let body = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Json {
                k: usize,
                a: Value,
                b: Value,
                c: Value,
                root_lo: Value,
                root_hi: Value,
            }
            json_line(&Json {
                k: period,
                a: number(&c.a),
                b: number(&c.b),
                c: number(&c.c),
                root_lo: number(format_real(&qa.root.lo)),
                root_hi: number(format_real(&qa.root.hi)),
            })
        }
        _ => csv_table(
            &["k", "A", "B", "C", "root_lo", "root_hi"],
            [[
                period.to_string(),
                c.a.to_string(),
                c.b.to_string(),
                c.c.to_string(),
                format_real(&qa.root.lo),
                format_real(&qa.root.hi),
            ]],
        )?,
    };
    Ok(body.into())
}
