use modtree::{
    common_intervals, is_cluster_graph, parse_edge_list, parse_permutations, EditSet, Graph, Label, MdTree, PairEdit,
};
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("modtree-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modtree")).args(args).stdin(Stdio::null()).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const P4: &str = "4 3\n0 1\n1 2\n2 3\n";
const BULL: &str = "# a-b-c-d with e on b and c\n5 5\n0 1\n1 2\n2 3\n1 4\n2 4\n";

#[test]
fn md_json_on_p4() {
    let f = scratch("p4.edges", P4);
    let o = run(&["md", "--in", f.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let t = MdTree::from_json(&stdout(&o)).unwrap();
    assert_eq!(t.label(t.root()), Label::Prime);
    assert_eq!(t.children(t.root()).len(), 4);
}

#[test]
fn every_md_route_agrees() {
    let f = scratch("gen.edges", &stdout(&run(&["gen", "--kind", "gnp", "--n", "30", "--seed", "4", "--p", "0.3"])));
    let a = stdout(&run(&["md", "--in", f.to_str().unwrap(), "--paranoid"]));
    let b = stdout(&run(&["md-skeleton", "--in", f.to_str().unwrap()]));
    let c = stdout(&run(&["md-factperm", "--in", f.to_str().unwrap()]));
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn bull_is_rejected_with_a_p4() {
    let f = scratch("bull.edges", BULL);
    let o = run(&["cograph", "--in", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let ids: Vec<usize> = stdout(&o).split_whitespace().map(|t| t.parse().unwrap()).collect();
    assert_eq!(ids.len(), 4);
    let g = parse_edge_list(BULL).unwrap();
    let e = |a: usize, b: usize| g.has_edge(ids[a], ids[b]);
    assert!(e(0, 1) && e(1, 2) && e(2, 3) && !e(0, 2) && !e(0, 3) && !e(1, 3));
}

#[test]
fn intervals_match_the_library() {
    let s = scratch("s.txt", "3 1 2 5 4 7 6\n");
    let t = scratch("t.txt", "1 2 3 4 5 6 7\n");
    let o = run(&["intervals", "--sigma", s.to_str().unwrap(), "--tau", t.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let sp = parse_permutations("3 1 2 5 4 7 6").unwrap().remove(0);
    let tp = parse_permutations("1 2 3 4 5 6 7").unwrap().remove(0);
    assert_eq!(stdout(&o), common_intervals(&sp, &tp).unwrap().to_text());
    let both = scratch("st.txt", "3 1 2 5 4 7 6\n1 2 3 4 5 6 7\n");
    assert_eq!(stdout(&run(&["intervals", "--in", both.to_str().unwrap()])), stdout(&o));
}

#[test]
fn malformed_input_exits_two_with_line() {
    let f = scratch("bad.edges", "3 2\n0 1\n1 q\n");
    let o = run(&["md", "--in", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(run(&["md", "--nope"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
}

#[test]
fn output_is_stable() {
    let args = ["gen", "--kind", "cotree", "--n", "40", "--seed", "9", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let f = scratch("stable.json", &stdout(&run(&args)));
    let a = run(&["cograph", "--in", f.to_str().unwrap(), "--format", "dot"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, run(&["cograph", "--in", f.to_str().unwrap(), "--format", "dot"]).stdout);
}

#[test]
fn verify_reports_first_violation() {
    let g = scratch("v.edges", P4);
    let good = scratch("good.json", &stdout(&run(&["md", "--in", g.to_str().unwrap(), "--format", "json"])));
    let o = run(&["verify", "--in", g.to_str().unwrap(), "--tree", good.to_str().unwrap()]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "ok\n".into()));
    let flat = r#"{"label":"series","children":[{"label":"leaf","vertex":0},{"label":"leaf","vertex":1},{"label":"leaf","vertex":2},{"label":"leaf","vertex":3}]}"#;
    let bad = scratch("bad.json", flat);
    let o = run(&["verify", "--in", g.to_str().unwrap(), "--tree", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("node "));
}

#[test]
fn dynamic_script() {
    let script = scratch("edits.txt", "+v 0\n+v 1 0\n+v 2 1\n+v 3 2\n+e 0 2\n");
    let o = run(&["dynamic", "--empty", "--script", script.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.starts_with("rejected +v 3 2: "));
    let ok = scratch("edits2.txt", "+v 0\n+v 1 0\n+v 2\n-e 0 1\n");
    let o = run(&["dynamic", "--empty", "--script", ok.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let t = MdTree::from_json(&stdout(&o)).unwrap();
    assert_eq!(t.label(t.root()), Label::Parallel);
}

#[test]
fn cluster_editing_commands() {
    let inst = "6 5\n0 1\n1 2\n0 2\n2 3\n4 5\nk 1\n";
    let f = scratch("inst.txt", inst);
    let o = run(&["solve-ce", "--in", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let edits: Vec<PairEdit> = stdout(&o)
        .lines()
        .map(|l| {
            let (sign, rest) = l.split_at(1);
            let v: Vec<usize> = rest.split_whitespace().map(|t| t.parse().unwrap()).collect();
            if sign == "+" { PairEdit::Insert(v[0], v[1]) } else { PairEdit::Delete(v[0], v[1]) }
        })
        .collect();
    let g = parse_edge_list(inst.trim_end_matches("k 1\n")).unwrap();
    assert!(is_cluster_graph(&EditSet(edits).apply(&g).unwrap()));
    let k = stdout(&run(&["kernel", "--in", f.to_str().unwrap()]));
    assert!(k.contains("# rule1 remove 4 5"));
    let none = scratch("none.txt", "5 4\n0 1\n1 2\n2 3\n3 4\nk 1\n");
    assert_eq!(run(&["solve-ce", "--in", none.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn factperm_and_fractures() {
    let f = scratch("fp.edges", BULL);
    let order = stdout(&run(&["factperm", "--in", f.to_str().unwrap()]));
    let p = scratch("order.txt", &order);
    let a = stdout(&run(&["fractures", "--in", f.to_str().unwrap()]));
    let b = stdout(&run(&["fractures", "--in", f.to_str().unwrap(), "--perm", p.to_str().unwrap()]));
    assert_eq!(a, b);
    let short = scratch("short.txt", "0 1\n");
    assert_eq!(run(&["fractures", "--in", f.to_str().unwrap(), "--perm", short.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn version_names_the_format() {
    let o = run(&["--version"]);
    assert!(stdout(&o).contains("format 1"));
    let g: Graph = parse_edge_list(&stdout(&run(&["gen", "--kind", "cluster", "--n", "12"]))).unwrap();
    assert!(is_cluster_graph(&g));
}
