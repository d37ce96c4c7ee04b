/**
 * Evaluation session: owns the working scenario document and keeps the
 * displayed results in lockstep with it.
 *
 * Every edit invalidates the current result immediately and issues a
 * sequenced evaluate request (debounced, so slider drags coalesce).
 * Only the response to the most recently issued request is ever
 * applied; responses that arrive after a newer request was issued are
 * dropped, so a slow round trip can never surface a stale total.
 */

import type { EvaluateFn, EvaluateResponse, ScenarioDoc } from "./types.js";

export interface SessionOptions {
  /** Delay before an edit triggers an evaluate call. 0 means immediate. */
  debounceMs?: number;
}

export type SessionListener = () => void;

export class EvaluationSession {
  private doc: ScenarioDoc;
  private readonly evaluateFn: EvaluateFn;
  private readonly debounceMs: number;

  private nextSeq = 0;
  private latestIssued = -1;
  private inFlight = 0;
  private timer: ReturnType<typeof setTimeout> | undefined;

  private current: EvaluateResponse | null = null;
  private lastError: string | null = null;
  private listeners: SessionListener[] = [];

  constructor(evaluateFn: EvaluateFn, doc: ScenarioDoc, options: SessionOptions = {}) {
    this.evaluateFn = evaluateFn;
    this.doc = doc;
    this.debounceMs = options.debounceMs ?? 150;
  }

  get document(): ScenarioDoc {
    return this.doc;
  }

  /** Result for the current document, or null while one is pending. */
  get result(): EvaluateResponse | null {
    return this.current;
  }

  get error(): string | null {
    return this.lastError;
  }

  get pending(): boolean {
    return this.timer !== undefined || this.inFlight > 0;
  }

  subscribe(listener: SessionListener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private notify(): void {
    for (const listener of this.listeners) {
      listener();
    }
  }

  setParameter(name: string, value: string): void {
    this.doc = {
      ...this.doc,
      parameters: { ...this.doc.parameters, [name]: value },
    };
    // the shown result no longer matches the document
    this.current = null;
    this.lastError = null;
    this.scheduleRefresh();
    this.notify();
  }

  private scheduleRefresh(): void {
    if (this.debounceMs <= 0) {
      void this.refresh();
      return;
    }
    if (this.timer !== undefined) {
      clearTimeout(this.timer);
    }
    this.timer = setTimeout(() => {
      this.timer = undefined;
      void this.refresh();
    }, this.debounceMs);
  }

  async refresh(): Promise<void> {
    const seq = this.nextSeq++;
    this.latestIssued = seq;
    this.inFlight += 1;
    this.current = null;
    this.lastError = null;
    this.notify();
    try {
      const result = await this.evaluateFn(this.doc);
      if (seq === this.latestIssued) {
        this.current = result;
      }
    } catch (err) {
      if (seq === this.latestIssued) {
        this.lastError = err instanceof Error ? err.message : String(err);
      }
    } finally {
      this.inFlight -= 1;
      // superseded responses change nothing, so repaint only for the live one
      if (seq === this.latestIssued) {
        this.notify();
      }
    }
  }
}

/** Formatted USD net for display, or a placeholder while pending. */
export function usdNet(session: EvaluationSession): string | null {
  const result = session.result;
  if (result === null) {
    return null;
  }
  return result.totals["USD"]?.net ?? null;
}
