// Session flow: name form -> instruction gate -> pages -> thank-you.
// Failed submissions keep the page state and offer a retry; a reload with
// no progress shows the gate again (the session id survives in
// sessionStorage so a mid-test reload resumes where it was).

import { ApiClient, PagePayload } from "./api.js";
import { AudioFactory, SyncPlayer } from "./player.js";
import {
  InstructionGate,
  MosPageViewModel,
  MushraPageViewModel,
  viewModelFor,
} from "./viewmodel.js";
import {
  renderDone,
  renderGate,
  renderMosPage,
  renderMushraPage,
  renderRetry,
} from "./views.js";

const SESSION_KEY = "mkspeech-session";

export interface AppOptions {
  testId: string;
  api?: ApiClient;
  audioFactory?: AudioFactory;
  storage?: Storage;
}

export class App {
  private api: ApiClient;
  private storage: Storage;
  private audioFactory?: AudioFactory;
  private sessionId: string | null = null;
  private instructions = "";

  constructor(private root: HTMLElement, private options: AppOptions) {
    this.api = options.api ?? new ApiClient();
    this.storage = options.storage ?? window.sessionStorage;
    this.audioFactory = options.audioFactory;
  }

  private show(screen: HTMLElement): void {
    this.root.replaceChildren(screen);
  }

  /** Entry point: resume a stored session or ask for the listener name. */
  async start(): Promise<void> {
    const stored = this.storage.getItem(SESSION_KEY);
    if (stored) {
      this.sessionId = stored;
      const page = await this.api.nextPage(stored);
      if (!page.done && (page.page_index ?? 0) === 0) {
        this.showGate();
      } else {
        await this.showPage(page);
      }
      return;
    }
    this.showNameForm();
  }

  private showNameForm(): void {
    const form = document.createElement("section");
    form.className = "screen name-form";
    const heading = document.createElement("h1");
    heading.textContent = "Listening test";
    const input = document.createElement("input");
    input.id = "listener-name";
    input.placeholder = "Your name";
    const button = document.createElement("button");
    button.id = "join";
    button.textContent = "Join";
    button.addEventListener("click", () => {
      const name = input.value.trim();
      if (name) void this.createSession(name);
    });
    form.append(heading, input, button);
    this.show(form);
  }

  private async createSession(name: string): Promise<void> {
    const session = await this.api.startSession(this.options.testId, name);
    this.sessionId = session.session_id;
    this.instructions = session.instructions;
    this.storage.setItem(SESSION_KEY, session.session_id);
    this.showGate();
  }

  private showGate(): void {
    const gate = new InstructionGate();
    this.show(
      renderGate(this.instructions || "Please rate the samples you will hear.", gate, () => {
        void this.advance();
      }),
    );
  }

  private async advance(): Promise<void> {
    const page = await this.api.nextPage(this.sessionId!);
    await this.showPage(page);
  }

  private async showPage(page: PagePayload): Promise<void> {
    if (page.done) {
      this.storage.removeItem(SESSION_KEY);
      this.show(renderDone());
      return;
    }
    const vm = viewModelFor(page);
    const player = new SyncPlayer(this.audioFactory);
    const audioUrl = (ref: { audio_url: string }) => this.api.audioUrl(ref);
    const submit = () => void this.submit(vm, player);
    const screen =
      vm instanceof MosPageViewModel
        ? renderMosPage(vm, player, audioUrl, submit)
        : renderMushraPage(vm, player, audioUrl, submit);
    this.show(screen);
  }

  private async submit(
    vm: MosPageViewModel | MushraPageViewModel,
    player: SyncPlayer,
  ): Promise<void> {
    player.stopAll();
    try {
      await this.api.submitRating(this.sessionId!, vm.page.page_id!, vm.submission());
    } catch (error) {
      // keep the rated page on screen; the banner retries the same payload
      const banner = renderRetry("Could not reach the server.", () => {
        banner.remove();
        void this.submit(vm, player);
      });
      this.root.appendChild(banner);
      return;
    }
    await this.advance();
  }
}

export function mount(root: HTMLElement, options: AppOptions): App {
  const app = new App(root, options);
  void app.start();
  return app;
}
