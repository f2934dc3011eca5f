//! HTTP front end of the survey: sessions, answers and rating export.
//!
//! Routes:
//! - `POST /sessions` `{"participant": "..."}`: new session with questions.
//! - `GET /sessions/{id}`: resume a session.
//! - `POST /sessions/{id}/direct/{idx}` `{"relatedness": 1-5, "similarity": 1-5}`
//! - `POST /sessions/{id}/indirect/{idx}` `{"chosen": "id1" | "id2"}`
//! - `GET /export?format=csv&kind=direct|indirect[&partial=true]`, or
//!   `format=json` for both files in one object.

use std::net::SocketAddr;
use std::sync::{Arc, Mutex};

use axum::extract::rejection::JsonRejection;
use axum::extract::{Path, Query, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use idbench_core::model::{write_direct_ratings, write_indirect_ratings, BLANK_MARKER};
use idbench_core::survey::{SessionState, SurveySession, SurveyStore};
use idbench_core::Error;
use serde::{Deserialize, Serialize};

pub const SEED_ENV: &str = "IDBENCH_SURVEY_SEED";

/// Reads the sampling seed from the environment, if set.
pub fn seed_from_env() -> Result<Option<u64>, String> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| format!("{SEED_ENV} must be an unsigned integer, got {v:?}")),
        Err(_) => Ok(None),
    }
}

pub type SharedStore = Arc<Mutex<SurveyStore>>;

pub fn router(store: SurveyStore) -> Router {
    let state: SharedStore = Arc::new(Mutex::new(store));
    Router::new()
        .route("/sessions", post(create_session))
        .route("/sessions/{id}", get(get_session))
        .route("/sessions/{id}/direct/{idx}", post(submit_direct))
        .route("/sessions/{id}/indirect/{idx}", post(submit_indirect))
        .route("/export", get(export))
        .with_state(state)
}

pub async fn serve(store: SurveyStore, addr: SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router(store)).await
}

pub struct ApiError(StatusCode, String);

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Validation(_) | Error::Parse { .. } => StatusCode::BAD_REQUEST,
            Error::NotFound(_) => StatusCode::NOT_FOUND,
            Error::Conflict(_) => StatusCode::CONFLICT,
            _ => StatusCode::INTERNAL_SERVER_ERROR,
        };
        ApiError(status, e.to_string())
    }
}

impl From<JsonRejection> for ApiError {
    fn from(r: JsonRejection) -> Self {
        ApiError(StatusCode::BAD_REQUEST, r.body_text())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.0, Json(serde_json::json!({ "error": self.1 }))).into_response()
    }
}

type ApiResult<T> = Result<T, ApiError>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DirectItem {
    pub index: usize,
    pub id1: String,
    pub id2: String,
    pub answered: bool,
}

/// An indirect question as shown to participants: the owner is hidden and
/// its occurrences are already blanked.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndirectItem {
    pub index: usize,
    pub id1: String,
    pub id2: String,
    pub context: Vec<String>,
    pub answered: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SessionView {
    pub session_id: String,
    pub participant: String,
    pub state: SessionState,
    pub answered: usize,
    pub direct: Vec<DirectItem>,
    pub indirect: Vec<IndirectItem>,
}

impl From<&SurveySession> for SessionView {
    fn from(s: &SurveySession) -> Self {
        SessionView {
            session_id: s.session_id.clone(),
            participant: s.participant.clone(),
            state: s.state(),
            answered: s.answered(),
            direct: s
                .direct
                .iter()
                .zip(&s.direct_answers)
                .enumerate()
                .map(|(index, (p, a))| DirectItem {
                    index,
                    id1: p.id1.to_string(),
                    id2: p.id2.to_string(),
                    answered: a.is_some(),
                })
                .collect(),
            indirect: s
                .indirect
                .iter()
                .zip(&s.indirect_answers)
                .enumerate()
                .map(|(index, (q, a))| IndirectItem {
                    index,
                    id1: q.pair.id1.to_string(),
                    id2: q.pair.id2.to_string(),
                    context: q.context.blanked(BLANK_MARKER),
                    answered: a.is_some(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Ack {
    pub state: SessionState,
    pub answered: usize,
}

#[derive(Debug, Deserialize)]
struct NewSession {
    participant: String,
}

#[derive(Debug, Deserialize)]
struct DirectBody {
    relatedness: i64,
    similarity: i64,
}

#[derive(Debug, Deserialize)]
struct IndirectBody {
    chosen: String,
}

fn lock(store: &SharedStore) -> std::sync::MutexGuard<'_, SurveyStore> {
    // A panic mid-request leaves the store usable: writes are applied
    // only after the log append succeeds.
    store.lock().unwrap_or_else(|p| p.into_inner())
}

async fn create_session(
    State(store): State<SharedStore>,
    body: Result<Json<NewSession>, JsonRejection>,
) -> ApiResult<(StatusCode, Json<SessionView>)> {
    let Json(body) = body?;
    let mut store = lock(&store);
    let session = store.create_session(body.participant)?;
    Ok((StatusCode::CREATED, Json(SessionView::from(session))))
}

async fn get_session(State(store): State<SharedStore>, Path(id): Path<String>) -> ApiResult<Json<SessionView>> {
    let store = lock(&store);
    Ok(Json(SessionView::from(store.session(&id)?)))
}

fn likert_arg(name: &str, v: i64) -> Result<u8, ApiError> {
    u8::try_from(v).map_err(|_| ApiError(StatusCode::BAD_REQUEST, format!("{name} must be in 1..=5, got {v}")))
}

async fn submit_direct(
    State(store): State<SharedStore>,
    Path((id, idx)): Path<(String, usize)>,
    body: Result<Json<DirectBody>, JsonRejection>,
) -> ApiResult<Json<Ack>> {
    let Json(body) = body?;
    let rel = likert_arg("relatedness", body.relatedness)?;
    let sim = likert_arg("similarity", body.similarity)?;
    let mut store = lock(&store);
    let s = store.submit_direct(&id, idx, rel, sim)?;
    Ok(Json(Ack {
        state: s.state(),
        answered: s.answered(),
    }))
}

async fn submit_indirect(
    State(store): State<SharedStore>,
    Path((id, idx)): Path<(String, usize)>,
    body: Result<Json<IndirectBody>, JsonRejection>,
) -> ApiResult<Json<Ack>> {
    let Json(body) = body?;
    let mut store = lock(&store);
    let s = store.submit_indirect(&id, idx, &body.chosen)?;
    Ok(Json(Ack {
        state: s.state(),
        answered: s.answered(),
    }))
}

#[derive(Debug, Deserialize)]
struct ExportQuery {
    #[serde(default)]
    format: Option<String>,
    #[serde(default)]
    kind: Option<String>,
    #[serde(default)]
    partial: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ExportBody {
    pub direct: String,
    pub indirect: String,
}

async fn export(State(store): State<SharedStore>, Query(q): Query<ExportQuery>) -> ApiResult<Response> {
    let (direct, indirect) = lock(&store).export(q.partial);
    let mut d = Vec::new();
    write_direct_ratings(&direct, &mut d)?;
    let mut i = Vec::new();
    write_indirect_ratings(&indirect, &mut i)?;
    let text = |b: Vec<u8>| String::from_utf8(b).expect("csv writers emit utf-8");
    match q.format.as_deref().unwrap_or("json") {
        "csv" => {
            let body = match q.kind.as_deref().unwrap_or("direct") {
                "direct" => text(d),
                "indirect" => text(i),
                other => {
                    return Err(ApiError(
                        StatusCode::BAD_REQUEST,
                        format!("kind must be direct or indirect, got {other:?}"),
                    ))
                }
            };
            Ok(([(header::CONTENT_TYPE, "text/csv; charset=utf-8")], body).into_response())
        }
        "json" => Ok(Json(ExportBody {
            direct: text(d),
            indirect: text(i),
        })
        .into_response()),
        other => Err(ApiError(
            StatusCode::BAD_REQUEST,
            format!("format must be csv or json, got {other:?}"),
        )),
    }
}
