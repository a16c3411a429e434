// Position-preserving playback across the reference and the rated stimuli
// of one page: switching sources pauses the current element and resumes the
// next one at the same position, which is what makes fine A/B comparisons
// possible. One media element per source, created lazily.

export interface AudioLike {
  src: string;
  currentTime: number;
  paused: boolean;
  play(): Promise<void> | void;
  pause(): void;
}

export type AudioFactory = (src: string) => AudioLike;

const domAudioFactory: AudioFactory = (src) => new Audio(src);

export class SyncPlayer {
  private elements = new Map<string, AudioLike>();
  private current: string | null = null;
  private position = 0;
  onplay: (key: string) => void = () => {};

  constructor(private factory: AudioFactory = domAudioFactory) {}

  register(key: string, src: string): void {
    if (!this.elements.has(key)) {
      this.elements.set(key, this.factory(src));
    }
  }

  get playing(): string | null {
    return this.current;
  }

  /** Play a registered source from the shared position; pauses the rest. */
  async play(key: string): Promise<void> {
    const target = this.elements.get(key);
    if (!target) {
      throw new Error(`no audio registered for ${key}`);
    }
    if (this.current !== null && this.current !== key) {
      const active = this.elements.get(this.current);
      if (active) {
        this.position = active.currentTime;
        active.pause();
      }
    }
    target.currentTime = this.position;
    await target.play();
    this.current = key;
    this.onplay(key);
  }

  pause(): void {
    if (this.current !== null) {
      const active = this.elements.get(this.current);
      if (active) {
        this.position = active.currentTime;
        active.pause();
      }
      this.current = null;
    }
  }

  /** Toggle between the current source and another, preserving position. */
  async toggle(key: string): Promise<void> {
    if (this.current === key) {
      this.pause();
    } else {
      await this.play(key);
    }
  }

  stopAll(): void {
    this.pause();
    this.position = 0;
  }
}
