//! Black-box tests of the binary: exit codes, output formats, file
//! loading, and the environment-variable override.

use std::path::PathBuf;
use std::process::{Command, Output};

fn qalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qalg"))
        .args(args)
        .env_remove("QALG_ORDER")
        .output()
        .expect("binary runs")
}

fn qalg_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qalg"))
        .args(args)
        .env_remove("QALG_ORDER")
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qalg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn verify_passes_on_the_builtin_algebras() {
    for algebra in ["so22", "uso22", "uiso21", "usl2", "uso22-swapped"] {
        let out = qalg(&["verify", "--algebra", algebra, "--order", "2", "--deterministic"]);
        assert_eq!(code(&out), 0, "{algebra}: {}", stderr(&out));
        assert!(stdout(&out).contains("overall: pass"), "{algebra}: {}", stdout(&out));
    }
}

#[test]
fn verify_json_is_valid_and_deterministic() {
    let args = ["verify", "--order", "2", "--format", "json", "--deterministic"];
    let first = qalg(&args);
    let second = qalg(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout, "deterministic runs must be byte-identical");

    let report: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(report["algebra"], "uso22");
    assert_eq!(report["truncation_order"], 2);
    assert_eq!(report["overall"], "pass");
    assert_eq!(report["tool_version"], env!("CARGO_PKG_VERSION"));
    let items = report["items"].as_array().unwrap();
    assert!(!items.is_empty());
    for item in items {
        assert_eq!(item["status"], "pass", "{item}");
        assert!(item.get("wall_ms").is_none(), "timing must be suppressed: {item}");
        assert!(item["check"].is_string() && item["subject"].is_string());
    }
}

#[test]
fn verify_reports_timing_unless_deterministic() {
    let out = qalg(&["verify", "--algebra", "usl2", "--order", "2", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let items = report["items"].as_array().unwrap();
    assert!(items.iter().all(|i| i["wall_ms"].is_u64()), "wall_ms expected on every item");
}

#[test]
fn parallel_and_sequential_json_agree() {
    let base = ["verify", "--order", "2", "--format", "json", "--deterministic"];
    let seq = qalg(&base);
    let par = qalg(&["verify", "--order", "2", "--format", "json", "--deterministic", "--jobs", "4"]);
    assert_eq!(code(&seq), 0);
    assert_eq!(code(&par), 0);
    assert_eq!(seq.stdout, par.stdout);
}

#[test]
fn unknown_algebra_is_a_usage_error() {
    let out = qalg(&["verify", "--algebra", "nonesuch"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("nonesuch"), "{}", stderr(&out));
}

#[test]
fn inapplicable_check_is_a_usage_error() {
    // The undeformed table has no coproducts, so there is nothing for
    // the Hopf suite to run against.
    let out = qalg(&["verify", "--algebra", "so22", "--checks", "hopf"]);
    assert_eq!(code(&out), 2);
    let out = qalg(&["verify", "--checks", "nonesuch"]);
    assert_eq!(code(&out), 2);
    let out = qalg(&["verify", "--checks", ""]);
    assert_eq!(code(&out), 2);
}

#[test]
fn check_subsets_run_only_the_named_groups() {
    let out = qalg(&["verify", "--algebra", "uso22", "--order", "2", "--checks", "jacobi,subalgebras", "--deterministic"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("jacobi"));
    assert!(text.contains("subalgebra"));
    assert!(!text.contains("hopf."), "unrequested groups must not run: {text}");
}

#[test]
fn verify_loads_algebra_files() {
    let path = write_temp("from-file.qalg", qalg_lib_source());
    let out = qalg(&["verify", "--algebra", path.to_str().unwrap(), "--order", "2", "--deterministic"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("from-file"), "file stem names the algebra");
}

fn qalg_lib_source() -> &'static str {
    qalg::specdsl::USO22_QALG
}

#[test]
fn inconsistent_table_fails_verification() {
    // Parses fine, but [B, A] = C, [C, A] = A, [C, B] = 0 violates the
    // Jacobi identity, so verification must fail and name the triple.
    let path = write_temp(
        "broken.qalg",
        "generators: A B C\n\nbrackets:\n  [B, A] = C\n  [C, A] = A\n  [C, B] = 0\n",
    );
    let out = qalg(&["verify", "--algebra", path.to_str().unwrap(), "--order", "1"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("FAIL"), "{text}");
    assert!(text.contains("(A, B, C)"), "{text}");
    assert!(text.contains("overall: FAIL"), "{text}");
}

#[test]
fn unparseable_file_is_a_usage_error() {
    let path = write_temp("garbage.qalg", "generators A B\nbrackets\n  [A = B\n");
    let out = qalg(&["verify", "--algebra", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("error"), "{}", stderr(&out));
}

#[test]
fn contract_reaches_the_flat_algebra() {
    let out = qalg(&["contract", "--order", "3", "--deterministic"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("uso22 -> uiso21"), "{text}");
    assert!(text.contains("contract.bracket"));
    assert!(text.contains("contract.coproduct"));
    assert!(text.contains("contract.rmatrix"));
    assert!(text.contains("overall: pass"));
}

#[test]
fn contract_without_param_rescale_diverges() {
    let out = qalg(&["contract", "--order", "3", "--no-param-rescale"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("DIVERGED"), "{text}");
    assert!(text.contains("diverges"), "{text}");
    assert!(text.contains("eps^-1"), "{text}");
}

#[test]
fn contract_identity_map_targets_the_source() {
    let out = qalg(&["contract", "--algebra", "usl2", "--order", "3", "--map", "identity", "--deterministic"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("usl2 -> usl2"), "{}", stdout(&out));
    assert!(stdout(&out).contains("overall: pass"));
}

#[test]
fn expand_prints_the_truncated_series() {
    let out = qalg(&["expand", "(exp(tau*H) - 1) / tau", "--order", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "H + 1/2 tau H^2 + 1/6 tau^2 H^3 + O(tau^3)\n");
}

#[test]
fn expand_applies_the_antipode_wrapper() {
    let out = qalg(&["expand", "S(P)", "--order", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "-P + tau H P - 1/2 tau^2 H^2 P + 1/6 tau^3 H^3 P + O(tau^4)\n");

    // No coproducts on the undeformed table, so no antipode either.
    let out = qalg(&["expand", "S(P)", "--algebra", "so22"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn expand_emits_json_when_asked() {
    let out = qalg(&["expand", "K*P - P*K", "--order", "2", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["algebra"], "uso22");
    assert_eq!(v["expr"], "K*P - P*K");
    assert!(v["result"].as_str().unwrap().starts_with("H"));
}

#[test]
fn expand_rejects_bad_expressions() {
    for expr in ["H +", "Q * P", "exp(H)", "1/(H)"] {
        let out = qalg(&["expand", expr, "--order", "2"]);
        assert_eq!(code(&out), 2, "{expr} should be rejected: {}", stdout(&out));
    }
}

#[test]
fn act_reports_solutions_of_the_lattice_wave_equation() {
    let out = qalg(&["act", "casimir-deformed", "x^2 + t^2", "--order", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0\nsolution\n");

    let out = qalg(&["act", "casimir-classical", "x^2", "--order", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "2\nnot a solution\n");
}

#[test]
fn act_applies_single_generators() {
    let out = qalg(&["act", "K-deformed", "t", "--order", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "-x\n");
}

#[test]
fn act_rejects_unusable_requests() {
    // Too much t-degree for the truncated shift series.
    let out = qalg(&["act", "casimir-deformed", "t^5", "--order", "2"]);
    assert_eq!(code(&out), 2);
    // Unknown generator and malformed action name.
    let out = qalg(&["act", "Q-deformed", "t", "--order", "2"]);
    assert_eq!(code(&out), 2);
    let out = qalg(&["act", "casimir", "t", "--order", "2"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn order_comes_from_the_environment_when_not_flagged() {
    let out = qalg_with_env(&["expand", "(exp(tau*H) - 1) / tau"], "QALG_ORDER", "2");
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "H + 1/2 tau H^2 + O(tau^2)\n");

    // An explicit flag wins over the environment.
    let out = qalg_with_env(&["expand", "(exp(tau*H) - 1) / tau", "--order", "3"], "QALG_ORDER", "2");
    assert_eq!(stdout(&out), "H + 1/2 tau H^2 + 1/6 tau^2 H^3 + O(tau^3)\n");
}

#[test]
fn bad_usage_exits_2() {
    let out = qalg(&[]);
    assert_eq!(code(&out), 2);
    let out = qalg(&["verify", "--order", "not-a-number"]);
    assert_eq!(code(&out), 2);
    let out = qalg(&["frobnicate"]);
    assert_eq!(code(&out), 2);
}
