// Page state, kept free of DOM so the submit-gating rules are unit-testable.
// The shared rule: submit unlocks only when every required rating is set
// and every rated stimulus has been played at least once.

import type { PagePayload, RatingBody } from "./api.js";

export class InstructionGate {
  confirmed = false;

  get canStart(): boolean {
    return this.confirmed;
  }
}

export class MosPageViewModel {
  score: number | null = null;
  private played = false;

  constructor(readonly page: PagePayload) {
    if (page.page_type !== "mos" || !page.stimulus) {
      throw new Error("not a MOS page payload");
    }
  }

  markPlayed(): void {
    this.played = true;
  }

  setScore(value: number): void {
    if (!Number.isInteger(value) || value < 1 || value > 5) {
      throw new Error(`MOS score must be an integer 1..5, got ${value}`);
    }
    this.score = value;
  }

  get canSubmit(): boolean {
    return this.score !== null && this.played;
  }

  submission(): RatingBody {
    if (!this.canSubmit || this.score === null) {
      throw new Error("page is not ready to submit");
    }
    return { value: this.score };
  }
}

export class MushraPageViewModel {
  /** Sliders render at 0 but count as unset until first touch. */
  private values = new Map<string, number>();
  private played = new Set<string>();
  readonly handles: string[];

  constructor(readonly page: PagePayload) {
    if (page.page_type !== "mushra" || !page.stimuli || !page.reference) {
      throw new Error("not a MUSHRA page payload");
    }
    this.handles = page.stimuli.map((s) => s.handle);
  }

  markPlayed(handle: string): void {
    if (this.handles.includes(handle)) {
      this.played.add(handle);
    }
  }

  setValue(handle: string, value: number): void {
    if (!this.handles.includes(handle)) {
      throw new Error(`unknown handle ${handle}`);
    }
    if (value < 0 || value > 100) {
      throw new Error(`MUSHRA value must be in [0, 100], got ${value}`);
    }
    this.values.set(handle, value);
  }

  isSet(handle: string): boolean {
    return this.values.has(handle);
  }

  wasPlayed(handle: string): boolean {
    return this.played.has(handle);
  }

  get allSet(): boolean {
    return this.handles.every((h) => this.values.has(h));
  }

  get allPlayed(): boolean {
    return this.handles.every((h) => this.played.has(h));
  }

  get canSubmit(): boolean {
    return this.allSet && this.allPlayed;
  }

  submission(): RatingBody {
    if (!this.canSubmit) {
      throw new Error("page is not ready to submit");
    }
    return { values: Object.fromEntries(this.values) };
  }
}

export type PageViewModel = MosPageViewModel | MushraPageViewModel;

export function viewModelFor(page: PagePayload): PageViewModel {
  return page.page_type === "mos" ? new MosPageViewModel(page) : new MushraPageViewModel(page);
}
