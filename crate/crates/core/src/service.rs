//! Local JSON-over-HTTP service.
//!
//! [`handle`] is a pure function from a request to a response; [`serve`]
//! only moves bytes between it and the socket.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::families::{
    classify_bipartite_report, classify_dn2_report, classify_multipartite_report, fixture_text, Fixture,
};
use crate::graph::PartList;
use crate::io::{from_value, verdict_json, GraphDoc, LayoutDoc};
use crate::represent::{decide_itrvg, decide_trvg, extract, verify, Budget, Mapping, Screens};
use crate::svg::{render_svg, RenderOptions};

/// Upper limit on the wall-clock budget a client may request.
pub const MAX_DECIDE_SECONDS: f64 = 600.0;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Response {
    pub status: u16,
    pub content_type: &'static str,
    pub body: String,
}

impl Response {
    fn json(status: u16, value: &Value) -> Response {
        Response { status, content_type: "application/json", body: value.to_string() }
    }

    fn text(content_type: &'static str, body: String) -> Response {
        Response { status: 200, content_type, body }
    }

    fn error(status: u16, error: &str, detail: impl Into<String>) -> Response {
        Response::json(status, &json!({"error": error, "detail": detail.into()}))
    }
}

/// Short machine-readable name of an error.
pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::ZeroWidth { .. } => "zero_width",
        Error::ZeroHeight { .. } => "zero_height",
        Error::DuplicateId(_) => "duplicate_id",
        Error::EmptyLayout => "empty_layout",
        Error::UnknownId(_) => "unknown_id",
        Error::NoStrip { .. } => "no_strip",
        Error::OverlapViolation { .. } => "overlap_violation",
        Error::InvalidCoord(_) => "invalid_coord",
        Error::TooSmall { .. } => "too_small",
        Error::TooLarge { .. } => "too_large",
        Error::VertexOutOfRange { .. } => "vertex_out_of_range",
        Error::InvalidGraph(_) => "invalid_graph",
        Error::InvalidPartList(_) => "invalid_part_list",
        Error::TooManyCliques { .. } => "too_many_cliques",
        Error::InvalidModels(_) => "invalid_models",
        Error::SizeMismatch { .. } => "size_mismatch",
        Error::InvalidMapping(_) => "invalid_mapping",
        Error::NotKPartite { .. } => "not_k_partite",
        Error::SamePartVisibility { .. } => "same_part_visibility",
        Error::NotRepresentable(_) => "not_representable",
        Error::InvalidArgument(_) => "invalid_argument",
        Error::UnknownFixture(_) => "unknown_fixture",
        Error::Schema { .. } => "schema",
        Error::Io(_) => "io",
    }
}

fn from_error(e: Error) -> Response {
    let status = match e {
        Error::Schema { .. } => 400,
        Error::UnknownFixture(_) => 404,
        Error::Io(_) => 500,
        _ => 422,
    };
    Response::error(status, error_kind(&e), e.to_string())
}

fn body_json(body: &str) -> Result<Value> {
    serde_json::from_str(body).map_err(|e| Error::Schema { path: ".".into(), message: e.to_string() })
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MappingDoc {
    Named(String),
    Explicit(HashMap<String, usize>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VerifyRequest {
    layout: Value,
    graph: Value,
    #[serde(default)]
    mapping: Option<MappingDoc>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct BudgetDoc {
    nodes: Option<u64>,
    seconds: Option<f64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DecideRequest {
    graph: Value,
    mode: crate::io::DocMode,
    #[serde(default)]
    budget: Option<BudgetDoc>,
    #[serde(default)]
    screens: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RenderRequest {
    layout: Value,
    #[serde(default)]
    options: RenderOptions,
}

fn api_extract(body: &str) -> Result<Value> {
    let layout = LayoutDoc::from_value(body_json(body)?)?.to_layout()?;
    let g = extract(&layout)?;
    Ok(serde_json::to_value(GraphDoc::from_graph(&g, None)).expect("plain data"))
}

pub fn parse_mapping(name: &str) -> Result<Mapping> {
    match name {
        "identity" => Ok(Mapping::Identity),
        "search" => Ok(Mapping::Search),
        other => Err(Error::InvalidArgument(format!("unknown mapping `{other}`; expected identity or search"))),
    }
}

fn api_verify(body: &str) -> Result<Value> {
    let req: VerifyRequest = from_value(body_json(body)?)?;
    let layout = LayoutDoc::from_value(req.layout)?.to_layout()?;
    let graph = GraphDoc::from_value(req.graph)?.to_graph()?;
    let mapping = match req.mapping {
        None => Mapping::Identity,
        Some(MappingDoc::Named(name)) => parse_mapping(&name)?,
        Some(MappingDoc::Explicit(m)) => Mapping::Explicit(m),
    };
    let report = verify(&layout, &graph, &mapping)?;
    Ok(serde_json::to_value(report).expect("plain data"))
}

fn api_decide(body: &str) -> Result<Value> {
    let req: DecideRequest = from_value(body_json(body)?)?;
    let g = GraphDoc::from_value(req.graph)?.to_graph()?;
    let default = Budget::from_env();
    let b = req.budget.unwrap_or_default();
    let seconds = b.seconds.unwrap_or(default.max_seconds);
    if !seconds.is_finite() || seconds <= 0.0 || b.nodes == Some(0) {
        return Err(Error::InvalidArgument("budget must be positive".into()));
    }
    let budget = Budget::new(b.nodes.unwrap_or(default.max_nodes), seconds.min(MAX_DECIDE_SECONDS));
    let decision = match req.mode {
        crate::io::DocMode::Trvg => decide_trvg(&g, budget, if req.screens { Screens::ALL } else { Screens::NONE })?,
        crate::io::DocMode::Itrvg => decide_itrvg(&g, budget)?,
    };
    Ok(verdict_json(&g, &decision))
}

fn api_render(body: &str) -> Result<String> {
    let req: RenderRequest = from_value(body_json(body)?)?;
    let layout = LayoutDoc::from_value(req.layout)?.to_layout()?;
    Ok(render_svg(&layout, &req.options))
}

fn parse_usize_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidArgument(format!("`{t}` is not a count"))))
        .collect()
}

/// Parses `a1,a2,...` into a part list.
pub fn parse_part_list(s: &str) -> Result<PartList> {
    PartList::new(parse_usize_list(s).map_err(|e| Error::InvalidPartList(e.to_string()))?)
}

fn api_classify(query: &str) -> Result<Value> {
    let params: Vec<(&str, &str)> =
        query.split('&').filter(|p| !p.is_empty()).filter_map(|p| p.split_once('=')).collect();
    let [(key, value)] = params[..] else {
        return Err(Error::InvalidArgument("expected exactly one of multipartite, bipartite, dn2".into()));
    };
    let value = value.replace("%2C", ",").replace("%2c", ",");
    let report = match key {
        "multipartite" => classify_multipartite_report(&parse_part_list(&value)?),
        "bipartite" => match parse_usize_list(&value)?[..] {
            [p, q] if p > 0 && q > 0 => classify_bipartite_report(p, q),
            _ => return Err(Error::InvalidArgument("bipartite expects two positive sizes".into())),
        },
        "dn2" => {
            let n = value.parse().map_err(|_| Error::InvalidArgument(format!("`{value}` is not a count")))?;
            classify_dn2_report(n)?
        }
        other => return Err(Error::InvalidArgument(format!("unknown classification `{other}`"))),
    };
    Ok(serde_json::to_value(report).expect("plain data"))
}

/// Routes one request.
pub fn handle(method: &str, path: &str, query: &str, body: &str) -> Response {
    let json_result = |r: Result<Value>| match r {
        Ok(v) => Response::json(200, &v),
        Err(e) => from_error(e),
    };
    match (method, path) {
        ("POST", "/api/extract") => json_result(api_extract(body)),
        ("POST", "/api/verify") => json_result(api_verify(body)),
        ("POST", "/api/decide") => json_result(api_decide(body)),
        ("POST", "/api/render") => match api_render(body) {
            Ok(svg) => Response::text("image/svg+xml", svg),
            Err(e) => from_error(e),
        },
        ("GET", "/api/classify") => json_result(api_classify(query)),
        ("GET", p) if p.starts_with("/api/fixture/") => match Fixture::from_name(&p["/api/fixture/".len()..]) {
            Ok(f) => Response::text("application/json", fixture_text(f)),
            Err(e) => from_error(e),
        },
        (_, "/api/extract" | "/api/verify" | "/api/decide" | "/api/render" | "/api/classify") => {
            Response::error(405, "method_not_allowed", format!("{method} {path}"))
        }
        _ => Response::error(404, "not_found", format!("{method} {path}")),
    }
}

fn is_local_origin(origin: &str) -> bool {
    let rest = origin.strip_prefix("http://").or_else(|| origin.strip_prefix("https://")).unwrap_or("");
    let host =
        rest.rsplit_once(':').map_or(rest, |(h, port)| if port.chars().all(|c| c.is_ascii_digit()) { h } else { rest });
    matches!(host, "localhost" | "127.0.0.1" | "[::1]")
}

fn header(name: &str, value: &str) -> tiny_http::Header {
    tiny_http::Header::from_bytes(name.as_bytes(), value.as_bytes()).expect("ascii header")
}

fn respond(mut req: tiny_http::Request) {
    let origin = req
        .headers()
        .iter()
        .find(|h| h.field.equiv("Origin"))
        .map(|h| h.value.as_str().to_string())
        .filter(|o| is_local_origin(o));
    let method = req.method().as_str().to_uppercase();
    let url = req.url().to_string();
    let (path, query) = url.split_once('?').unwrap_or((&url, ""));

    let resp = if method == "OPTIONS" {
        Response { status: 204, content_type: "text/plain", body: String::new() }
    } else {
        let mut body = String::new();
        match req.as_reader().read_to_string(&mut body) {
            Ok(_) => handle(&method, path, query, &body),
            Err(e) => Response::error(400, "body", e.to_string()),
        }
    };

    let mut out = tiny_http::Response::from_string(resp.body)
        .with_status_code(resp.status)
        .with_header(header("Content-Type", resp.content_type));
    if let Some(o) = origin {
        out = out
            .with_header(header("Access-Control-Allow-Origin", &o))
            .with_header(header("Access-Control-Allow-Methods", "GET, POST, OPTIONS"))
            .with_header(header("Access-Control-Allow-Headers", "Content-Type"))
            .with_header(header("Vary", "Origin"));
    }
    let _ = req.respond(out);
}

/// A bound, not yet running server.
pub struct Server {
    inner: Arc<tiny_http::Server>,
}

impl Server {
    pub fn bind(host: &str, port: u16) -> Result<Server> {
        let inner =
            tiny_http::Server::http((host, port)).map_err(|e| Error::Io(std::io::Error::other(e.to_string())))?;
        Ok(Server { inner: Arc::new(inner) })
    }

    /// The bound port; useful after binding port 0.
    pub fn port(&self) -> u16 {
        self.inner.server_addr().to_ip().map_or(0, |a| a.port())
    }

    /// Serves requests on `workers` threads until the process exits.
    pub fn run(self, workers: usize) {
        let handles: Vec<_> = (0..workers.max(1))
            .map(|_| {
                let server = Arc::clone(&self.inner);
                std::thread::spawn(move || {
                    while let Ok(req) = server.recv() {
                        respond(req);
                    }
                })
            })
            .collect();
        for h in handles {
            let _ = h.join();
        }
    }

    /// Runs on background threads and returns immediately.
    pub fn spawn(self, workers: usize) -> u16 {
        let port = self.port();
        std::thread::spawn(move || self.run(workers));
        port
    }
}

/// Binds and serves forever.
pub fn serve(host: &str, port: u16) -> Result<()> {
    let server = Server::bind(host, port)?;
    let workers = std::thread::available_parallelism().map_or(4, |n| n.get());
    eprintln!("listening on http://{host}:{}", server.port());
    server.run(workers);
    Ok(())
}
