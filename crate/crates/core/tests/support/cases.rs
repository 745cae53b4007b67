//! Hand-built sources whose node sizes sit around the chunk budget.

use astchunk::document::count_non_ws;
use astchunk::{ChunkingConfig, LanguageId, OversizePolicy};

/// Statements of exactly `size` non-whitespace bytes, each at most 120.
pub fn fill(size: usize, stmt: impl Fn(usize, usize) -> String) -> String {
    let overhead = count_non_ws(stmt(0, 0).as_bytes());
    let mut out = String::new();
    if size == 0 {
        return out;
    }
    assert!(size > overhead, "size {size} too small for one statement");
    let per = 120;
    let n = size.div_ceil(per);
    let mut left = size;
    for k in 0..n {
        let share = left / (n - k);
        left -= share;
        assert!(share > overhead);
        out.push_str(&stmt(k, share - overhead));
    }
    assert_eq!(count_non_ws(out.as_bytes()), size);
    out
}

pub fn sized(
    header: &str,
    footer: &str,
    size: usize,
    stmt: impl Fn(usize, usize) -> String,
) -> String {
    let fixed = count_non_ws(header.as_bytes()) + count_non_ws(footer.as_bytes());
    let text = format!("{header}{}{footer}", fill(size - fixed, stmt));
    assert_eq!(count_non_ws(text.as_bytes()), size);
    text
}

pub fn py_stmt(indent: &'static str) -> impl Fn(usize, usize) -> String {
    move |k, pad| format!("{indent}v{k:03} = \"{}\"\n", "a".repeat(pad))
}

/// A Python function of exactly `size` non-whitespace bytes, or a bare
/// identifier statement when `size` is too small for a function.
pub fn py_fn(name: &str, size: usize) -> String {
    if size < TINY {
        return format!("{}\n", "x".repeat(size));
    }
    sized(&format!("def {name}():\n"), "", size, py_stmt("    "))
}

pub fn py_method(name: &str, size: usize) -> String {
    if size < TINY {
        return format!("    {}\n", "x".repeat(size));
    }
    sized(
        &format!("    def {name}(self):\n"),
        "",
        size,
        py_stmt("        "),
    )
}

pub fn py_file(fns: &[usize]) -> String {
    fns.iter()
        .enumerate()
        .map(|(i, &s)| py_fn(&format!("f{i}"), s))
        .collect::<Vec<_>>()
        .join("\n\n")
}

pub fn py_class(name: &str, methods: &[usize]) -> String {
    let body: Vec<String> = methods
        .iter()
        .enumerate()
        .map(|(i, &s)| py_method(&format!("m{i}"), s))
        .collect();
    format!("class {name}:\n{}", body.join("\n"))
}

pub fn java_method(name: &str, size: usize) -> String {
    sized(
        &format!("    void {name}() {{\n"),
        "    }\n",
        size,
        |k, pad| format!("        String v{k:03} = \"{}\";\n", "a".repeat(pad)),
    )
}

pub fn java_class(name: &str, methods: &[usize]) -> String {
    let body: Vec<String> = methods
        .iter()
        .enumerate()
        .map(|(i, &s)| java_method(&format!("m{i}"), s))
        .collect();
    format!("class {name} {{\n{}}}\n", body.join("\n"))
}

pub fn ts_fn(name: &str, size: usize) -> String {
    if size < TINY {
        return format!("{}\n", "x".repeat(size));
    }
    sized(&format!("function {name}() {{\n"), "}\n", size, |k, pad| {
        format!("  const v{k:03} = \"{}\";\n", "a".repeat(pad))
    })
}

pub const TINY: usize = 30;

pub struct Case {
    pub name: &'static str,
    pub language: LanguageId,
    pub text: String,
    pub config: ChunkingConfig,
}

pub fn case(name: &'static str, language: LanguageId, text: String) -> Case {
    Case {
        name,
        language,
        text,
        config: ChunkingConfig::default(),
    }
}

pub fn cases() -> Vec<Case> {
    use LanguageId::*;
    let mut v = vec![
        case(
            "two functions summing to 1999",
            Python,
            py_file(&[1000, 999]),
        ),
        case(
            "two functions summing to 2000",
            Python,
            py_file(&[1000, 1000]),
        ),
        case(
            "two functions summing to 2001",
            Python,
            py_file(&[1000, 1001]),
        ),
        case(
            "three functions, first pair at 1999",
            Python,
            py_file(&[1000, 999, 500]),
        ),
        case(
            "three functions, first pair at 2000",
            Python,
            py_file(&[1000, 1000, 500]),
        ),
        case(
            "three functions, first pair at 2001",
            Python,
            py_file(&[1000, 1001, 500]),
        ),
        case("900/900/900/300", Python, py_file(&[900, 900, 900, 300])),
        case(
            "full function then small ones",
            Python,
            py_file(&[2000, 1, 1999]),
        ),
        case(
            "small ones around a full function",
            Python,
            py_file(&[1999, 1, 2000]),
        ),
        case(
            "alternating 1 and 1999",
            Python,
            py_file(&[1, 1999, 1, 1999, 1]),
        ),
        case("one function at 2001", Python, py_file(&[2001])),
        case(
            "oversized function between small ones",
            Python,
            py_file(&[500, 2001, 500]),
        ),
        case(
            "oversized function between near-full ones",
            Python,
            py_file(&[1999, 2001, 1999]),
        ),
        case(
            "thirds then a full function",
            Python,
            py_file(&[667, 667, 666, 2000, 1]),
        ),
        case(
            "class of methods at 1999",
            Python,
            py_class("A", &[1000, 992]),
        ),
        case(
            "class of methods at 2001",
            Python,
            py_class("A", &[1000, 994]),
        ),
        case(
            "class with an oversized method",
            Python,
            py_class("A", &[1999, 2001, 1]),
        ),
        case("Java class at 1999", Java, java_class("A", &[1000, 991])),
        case("Java class at 2001", Java, java_class("A", &[1000, 993])),
        case(
            "Java class with an oversized method",
            Java,
            java_class("A", &[600, 2001, 1960, 40]),
        ),
        case(
            "TypeScript functions at 1999/2000/2001",
            TypeScript,
            [
                ts_fn("a", 1999),
                ts_fn("b", 1),
                ts_fn("c", 1000),
                ts_fn("d", 1000),
                ts_fn("e", 1001),
            ]
            .join("\n"),
        ),
    ];
    let imports = "import os\nimport sys\n\n".to_string();
    v.push(case(
        "imports then functions around the budget",
        Python,
        imports + &py_file(&[1980, 1000, 1000, 2001]),
    ));
    let mut small = case(
        "budget 100 with many small functions",
        Python,
        py_file(&[30, 40, 30, 31, 69, 100, 1, 99, 50, 51, 101]),
    );
    small.config = ChunkingConfig::default().with_max_chunk_size(100);
    v.push(small);
    let mut split_only = case(
        "split-only over 500/500/500",
        Python,
        py_file(&[500, 500, 500, 2001]),
    );
    split_only.config = ChunkingConfig::default().with_merge(false);
    v.push(split_only);
    let mut leaf = case(
        "oversized string literal under emit-oversized",
        Python,
        format!("x = 1\ny = \"{}\"\nz = 2\n", "q".repeat(2500)),
    );
    leaf.config = ChunkingConfig::default().with_oversize_policy(OversizePolicy::EmitOversized);
    v.push(leaf);
    v
}

impl Case {
    pub fn document(&self) -> astchunk::SourceDocument {
        let ext = match self.language {
            LanguageId::Python => "py",
            LanguageId::Java => "java",
            LanguageId::CSharp => "cs",
            LanguageId::TypeScript => "ts",
        };
        astchunk::SourceDocument::new(format!("case.{ext}"), self.text.as_bytes(), self.language)
    }
}
