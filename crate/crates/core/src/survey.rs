//! Survey administration: session composition, answer recording and an
//! append-only JSONL event log per session.

use std::collections::{BTreeMap, HashMap};
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::corpus::word_positions;
use crate::error::{Error, Result};
use crate::model::{
    Choice, CodeContext, DirectRating, Identifier, IdentifierPair, IndirectRating, Likert,
    BLANK_MARKER,
};

pub const DIRECT_QUESTIONS: usize = 18;
pub const INDIRECT_QUESTIONS: usize = 15;

/// Pairs to ask about and the contexts available per identifier.
#[derive(Debug, Clone, Default)]
pub struct SurveyPool {
    pairs: Vec<IdentifierPair>,
    contexts: HashMap<Identifier, Vec<CodeContext>>,
}

fn leaks_owner(ctx: &CodeContext) -> bool {
    ctx.blanked(BLANK_MARKER)
        .iter()
        .any(|l| !word_positions(l, ctx.owner.as_str()).is_empty())
}

impl SurveyPool {
    /// Contexts whose blanked rendering would still show the owner as a
    /// whole word are dropped.
    pub fn new(pairs: Vec<IdentifierPair>, contexts: Vec<CodeContext>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for p in &pairs {
            if !seen.insert(p.pair_id.clone()) {
                return Err(Error::Validation(format!("duplicate pair {}", p.pair_id)));
            }
        }
        let mut by_owner: HashMap<Identifier, Vec<CodeContext>> = HashMap::new();
        for c in contexts {
            if !leaks_owner(&c) {
                by_owner.entry(c.owner.clone()).or_default().push(c);
            }
        }
        Ok(SurveyPool {
            pairs,
            contexts: by_owner,
        })
    }

    pub fn pairs(&self) -> &[IdentifierPair] {
        &self.pairs
    }

    pub fn contexts_of(&self, id: &Identifier) -> &[CodeContext] {
        self.contexts.get(id).map_or(&[], Vec::as_slice)
    }

    fn indirect_eligible(&self) -> Vec<&IdentifierPair> {
        self.pairs
            .iter()
            .filter(|p| !self.contexts_of(&p.id1).is_empty() || !self.contexts_of(&p.id2).is_empty())
            .collect()
    }

    /// Samples 18 direct and 15 indirect questions without replacement.
    /// The context owner is drawn uniformly among the pair's identifiers
    /// that have contexts, then one of its contexts uniformly.
    pub fn create_session(&self, session_id: String, participant: String, seed: u64) -> Result<SurveySession> {
        validate_participant(&participant)?;
        if self.pairs.len() < DIRECT_QUESTIONS {
            return Err(Error::Config(format!(
                "pool has {} pairs, need {DIRECT_QUESTIONS}",
                self.pairs.len()
            )));
        }
        let eligible = self.indirect_eligible();
        if eligible.len() < INDIRECT_QUESTIONS {
            return Err(Error::Config(format!(
                "pool has {} pairs with contexts, need {INDIRECT_QUESTIONS}",
                eligible.len()
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let direct: Vec<IdentifierPair> = self
            .pairs
            .choose_multiple(&mut rng, DIRECT_QUESTIONS)
            .cloned()
            .collect();
        let mut indirect = Vec::with_capacity(INDIRECT_QUESTIONS);
        for pair in eligible.choose_multiple(&mut rng, INDIRECT_QUESTIONS) {
            let owners: Vec<Choice> = [Choice::Id1, Choice::Id2]
                .into_iter()
                .filter(|&c| !self.contexts_of(pair.get(c)).is_empty())
                .collect();
            let owner = *owners.choose(&mut rng).expect("eligible pair has a context");
            let context = self
                .contexts_of(pair.get(owner))
                .choose(&mut rng)
                .expect("owner has a context")
                .clone();
            indirect.push(IndirectQuestion {
                pair: (*pair).clone(),
                owner,
                context,
            });
        }
        Ok(SurveySession {
            session_id,
            participant,
            direct_answers: vec![None; direct.len()],
            indirect_answers: vec![None; indirect.len()],
            direct,
            indirect,
        })
    }
}

fn validate_participant(p: &str) -> Result<()> {
    let ok = !p.is_empty()
        && p.len() <= 128
        && p.chars().all(|c| c.is_ascii_alphanumeric() || matches!(c, '-' | '_' | '.' | '@'));
    if ok {
        Ok(())
    } else {
        Err(Error::Validation(format!(
            "participant must be 1-128 characters of [A-Za-z0-9._@-], got {p:?}"
        )))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndirectQuestion {
    pub pair: IdentifierPair,
    pub owner: Choice,
    pub context: CodeContext,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectAnswer {
    pub relatedness: Likert,
    pub similarity: Likert,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SessionState {
    InProgress,
    Complete,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurveySession {
    pub session_id: String,
    pub participant: String,
    pub direct: Vec<IdentifierPair>,
    pub indirect: Vec<IndirectQuestion>,
    pub direct_answers: Vec<Option<DirectAnswer>>,
    pub indirect_answers: Vec<Option<Choice>>,
}

impl SurveySession {
    pub fn state(&self) -> SessionState {
        if self.direct_answers.iter().all(Option::is_some) && self.indirect_answers.iter().all(Option::is_some) {
            SessionState::Complete
        } else {
            SessionState::InProgress
        }
    }

    pub fn answered(&self) -> usize {
        self.direct_answers.iter().flatten().count() + self.indirect_answers.iter().flatten().count()
    }

    fn check_open(&self) -> Result<()> {
        if self.state() == SessionState::Complete {
            return Err(Error::Conflict(format!("session {} is complete", self.session_id)));
        }
        Ok(())
    }

    pub fn submit_direct(&mut self, index: usize, answer: DirectAnswer) -> Result<()> {
        self.check_open()?;
        let slot = self
            .direct_answers
            .get_mut(index)
            .ok_or_else(|| Error::NotFound(format!("direct question {index}")))?;
        if slot.is_some() {
            return Err(Error::Conflict(format!("direct question {index} already answered")));
        }
        *slot = Some(answer);
        Ok(())
    }

    pub fn submit_indirect(&mut self, index: usize, chosen: Choice) -> Result<()> {
        self.check_open()?;
        let slot = self
            .indirect_answers
            .get_mut(index)
            .ok_or_else(|| Error::NotFound(format!("indirect question {index}")))?;
        if slot.is_some() {
            return Err(Error::Conflict(format!("indirect question {index} already answered")));
        }
        *slot = Some(chosen);
        Ok(())
    }

    pub fn direct_ratings(&self) -> impl Iterator<Item = DirectRating> + '_ {
        self.direct.iter().zip(&self.direct_answers).filter_map(|(pair, a)| {
            a.map(|a| DirectRating {
                participant: self.participant.clone(),
                pair: pair.clone(),
                relatedness: a.relatedness,
                similarity: a.similarity,
            })
        })
    }

    pub fn indirect_ratings(&self) -> impl Iterator<Item = IndirectRating> + '_ {
        self.indirect.iter().zip(&self.indirect_answers).filter_map(|(q, a)| {
            a.map(|chosen| IndirectRating {
                participant: self.participant.clone(),
                pair: q.pair.clone(),
                context_owner: q.owner,
                chosen,
            })
        })
    }
}

/// One line of a session log.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum SurveyEvent {
    Created { session: SurveySession },
    Direct { index: usize, answer: DirectAnswer },
    Indirect { index: usize, chosen: Choice },
}

impl SurveyEvent {
    fn apply(self, session: &mut Option<SurveySession>) -> Result<()> {
        match (self, session.as_mut()) {
            (SurveyEvent::Created { session: s }, None) => {
                *session = Some(s);
                Ok(())
            }
            (SurveyEvent::Created { .. }, Some(_)) => Err(Error::Validation("session created twice".into())),
            (_, None) => Err(Error::Validation("answer before session creation".into())),
            (SurveyEvent::Direct { index, answer }, Some(s)) => s.submit_direct(index, answer),
            (SurveyEvent::Indirect { index, chosen }, Some(s)) => s.submit_indirect(index, chosen),
        }
    }
}

/// Sessions, optionally backed by a directory of `<session_id>.jsonl` logs.
#[derive(Debug)]
pub struct SurveyStore {
    pool: SurveyPool,
    dir: Option<PathBuf>,
    base_seed: Option<u64>,
    created: u64,
    sessions: BTreeMap<String, SurveySession>,
}

impl SurveyStore {
    pub fn in_memory(pool: SurveyPool, base_seed: Option<u64>) -> Self {
        SurveyStore {
            pool,
            dir: None,
            base_seed,
            created: 0,
            sessions: BTreeMap::new(),
        }
    }

    /// Opens (creating if needed) a log directory and replays its sessions.
    pub fn open(pool: SurveyPool, dir: &Path, base_seed: Option<u64>) -> Result<Self> {
        fs::create_dir_all(dir)?;
        let mut store = SurveyStore {
            pool,
            dir: Some(dir.to_owned()),
            base_seed,
            created: 0,
            sessions: BTreeMap::new(),
        };
        let mut logs: Vec<PathBuf> = fs::read_dir(dir)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "jsonl"))
            .collect();
        logs.sort();
        for path in logs {
            if let Some(s) = replay(&path)? {
                store.sessions.insert(s.session_id.clone(), s);
            }
        }
        store.created = store.sessions.len() as u64;
        Ok(store)
    }

    pub fn pool(&self) -> &SurveyPool {
        &self.pool
    }

    pub fn session(&self, id: &str) -> Result<&SurveySession> {
        self.sessions
            .get(id)
            .ok_or_else(|| Error::NotFound(format!("session {id}")))
    }

    pub fn sessions(&self) -> impl Iterator<Item = &SurveySession> {
        self.sessions.values()
    }

    fn next_seed(&mut self) -> u64 {
        let seed = match self.base_seed {
            Some(base) => {
                let mut r = ChaCha8Rng::seed_from_u64(base);
                r.set_stream(self.created);
                r.next_u64()
            }
            None => rand::thread_rng().gen(),
        };
        self.created += 1;
        seed
    }

    pub fn create_session(&mut self, participant: String) -> Result<&SurveySession> {
        let seed = self.next_seed();
        let mut id_rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let mut id = format!("{:016x}", id_rng.next_u64());
        while self.sessions.contains_key(&id) {
            id = format!("{:016x}", id_rng.next_u64());
        }
        let session = self.pool.create_session(id.clone(), participant, seed)?;
        self.append(&id, &SurveyEvent::Created { session: session.clone() })?;
        Ok(self.sessions.entry(id).or_insert(session))
    }

    pub fn submit_direct(&mut self, id: &str, index: usize, relatedness: u8, similarity: u8) -> Result<&SurveySession> {
        let answer = DirectAnswer {
            relatedness: Likert::new(relatedness)?,
            similarity: Likert::new(similarity)?,
        };
        let session = self
            .sessions
            .get_mut(id)
            .ok_or_else(|| Error::NotFound(format!("session {id}")))?;
        let mut updated = session.clone();
        updated.submit_direct(index, answer)?;
        self.append(id, &SurveyEvent::Direct { index, answer })?;
        self.sessions.insert(id.to_owned(), updated);
        Ok(&self.sessions[id])
    }

    pub fn submit_indirect(&mut self, id: &str, index: usize, chosen: &str) -> Result<&SurveySession> {
        let chosen: Choice = chosen.parse()?;
        let session = self
            .sessions
            .get_mut(id)
            .ok_or_else(|| Error::NotFound(format!("session {id}")))?;
        let mut updated = session.clone();
        updated.submit_indirect(index, chosen)?;
        self.append(id, &SurveyEvent::Indirect { index, chosen })?;
        self.sessions.insert(id.to_owned(), updated);
        Ok(&self.sessions[id])
    }

    fn append(&self, id: &str, event: &SurveyEvent) -> Result<()> {
        let Some(dir) = &self.dir else { return Ok(()) };
        let mut f = OpenOptions::new()
            .create(true)
            .append(true)
            .open(dir.join(format!("{id}.jsonl")))?;
        let mut line = serde_json::to_string(event)?;
        line.push('\n');
        f.write_all(line.as_bytes())?;
        f.sync_data()?;
        Ok(())
    }

    /// Ratings of complete sessions (or of every answered question when
    /// `include_partial`), in session-id order.
    pub fn export(&self, include_partial: bool) -> (Vec<DirectRating>, Vec<IndirectRating>) {
        let mut direct = Vec::new();
        let mut indirect = Vec::new();
        for s in self.sessions.values() {
            if include_partial || s.state() == SessionState::Complete {
                direct.extend(s.direct_ratings());
                indirect.extend(s.indirect_ratings());
            }
        }
        (direct, indirect)
    }
}

/// Rebuilds a session from its log. A final line cut short by a crash (no
/// trailing newline, unparsable) is ignored.
fn replay(path: &Path) -> Result<Option<SurveySession>> {
    let text = fs::read_to_string(path)?;
    let complete_tail = text.ends_with('\n');
    let lines: Vec<&str> = text.lines().collect();
    let mut session = None;
    for (i, line) in lines.iter().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let event: SurveyEvent = match serde_json::from_str(line) {
            Ok(e) => e,
            Err(_) if i + 1 == lines.len() && !complete_tail => break,
            Err(e) => return Err(Error::parse(i + 1, format!("{}: {e}", path.display()))),
        };
        event
            .apply(&mut session)
            .map_err(|e| Error::parse(i + 1, format!("{}: {e}", path.display())))?;
    }
    Ok(session)
}
