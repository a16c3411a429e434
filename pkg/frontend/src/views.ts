// DOM construction for the three screens. Everything is built with
// createElement on purpose: each text node is auditable, so no payload
// field can leak into the page unnoticed.

import type { PagePayload, StimulusRef } from "./api.js";
import type { SyncPlayer } from "./player.js";
import { InstructionGate, MosPageViewModel, MushraPageViewModel } from "./viewmodel.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function progressBar(page: PagePayload): HTMLElement {
  const wrap = el("div", "progress");
  const index = page.page_index ?? 0;
  const count = page.page_count ?? 1;
  const fill = el("div", "progress-fill");
  fill.style.width = `${Math.round((100 * index) / count)}%`;
  wrap.appendChild(fill);
  wrap.appendChild(el("span", "progress-text", `Page ${index + 1} of ${count}`));
  return wrap;
}

export function renderGate(
  instructions: string,
  gate: InstructionGate,
  onStart: () => void,
): HTMLElement {
  const root = el("section", "screen gate");
  root.appendChild(el("h1", undefined, "Listening test"));
  root.appendChild(el("p", "instructions", instructions));
  const label = el("label", "gate-check");
  const box = el("input");
  box.type = "checkbox";
  box.id = "gate-confirm";
  label.appendChild(box);
  label.appendChild(
    document.createTextNode(" I am wearing headphones and I am in a quiet room."),
  );
  const start = el("button", "start", "Start");
  start.id = "gate-start";
  start.disabled = true;
  box.addEventListener("change", () => {
    gate.confirmed = box.checked;
    start.disabled = !gate.canStart;
  });
  start.addEventListener("click", () => {
    if (gate.canStart) onStart();
  });
  root.appendChild(label);
  root.appendChild(start);
  return root;
}

function playButton(
  label: string,
  key: string,
  player: SyncPlayer,
  onPlayed: () => void,
): HTMLButtonElement {
  const button = el("button", "play", label);
  button.dataset.play = key;
  button.addEventListener("click", () => {
    void player.toggle(key).then(() => onPlayed());
  });
  return button;
}

export function renderMosPage(
  vm: MosPageViewModel,
  player: SyncPlayer,
  audioUrl: (ref: StimulusRef) => string,
  onSubmit: () => void,
): HTMLElement {
  const root = el("section", "screen mos");
  root.appendChild(progressBar(vm.page));
  root.appendChild(el("h2", undefined, "How natural does this sample sound?"));

  const stimulus = vm.page.stimulus!;
  player.register(stimulus.handle, audioUrl(stimulus));

  const submit = el("button", "submit", "Submit");
  submit.id = "submit";
  submit.disabled = true;
  const refresh = () => {
    submit.disabled = !vm.canSubmit;
  };

  root.appendChild(playButton("Play sample", stimulus.handle, player, () => {
    vm.markPlayed();
    refresh();
  }));

  const scale = el("div", "mos-scale");
  const labels = ["Bad", "Poor", "Fair", "Good", "Excellent"];
  for (let value = 1; value <= 5; value += 1) {
    const option = el("label", "mos-option");
    const radio = el("input");
    radio.type = "radio";
    radio.name = "mos-score";
    radio.setAttribute("value", String(value));
    radio.addEventListener("change", () => {
      vm.setScore(value);
      refresh();
    });
    option.appendChild(radio);
    option.appendChild(document.createTextNode(` ${value} – ${labels[value - 1]}`));
    scale.appendChild(option);
  }
  root.appendChild(scale);
  submit.addEventListener("click", () => {
    if (vm.canSubmit) onSubmit();
  });
  root.appendChild(submit);
  return root;
}

export function renderMushraPage(
  vm: MushraPageViewModel,
  player: SyncPlayer,
  audioUrl: (ref: StimulusRef) => string,
  onSubmit: () => void,
): HTMLElement {
  const root = el("section", "screen mushra");
  root.appendChild(progressBar(vm.page));
  root.appendChild(
    el("h2", undefined, "Rate each sample against the reference"),
  );

  const reference = vm.page.reference!;
  player.register("reference", audioUrl(reference));

  const submit = el("button", "submit", "Submit");
  submit.id = "submit";
  submit.disabled = true;
  const refresh = () => {
    submit.disabled = !vm.canSubmit;
  };

  const refRow = el("div", "reference-row");
  refRow.appendChild(playButton("Reference", "reference", player, () => {}));
  refRow.appendChild(el("span", "hint", "always available, not rated"));
  root.appendChild(refRow);

  vm.page.stimuli!.forEach((stimulus, i) => {
    player.register(stimulus.handle, audioUrl(stimulus));
    const row = el("div", "stimulus-row unset");
    row.dataset.handle = stimulus.handle;

    row.appendChild(playButton(`Stimulus ${i + 1}`, stimulus.handle, player, () => {
      vm.markPlayed(stimulus.handle);
      refresh();
    }));

    const slider = el("input", "score-slider");
    slider.type = "range";
    slider.min = "0";
    slider.max = "100";
    slider.value = "0";
    const value = el("span", "score-value", "—");
    slider.addEventListener("input", () => {
      vm.setValue(stimulus.handle, Number(slider.value));
      row.classList.remove("unset");
      value.textContent = slider.value;
      refresh();
    });
    row.appendChild(slider);
    row.appendChild(value);
    root.appendChild(row);
  });

  submit.addEventListener("click", () => {
    if (vm.canSubmit) onSubmit();
  });
  root.appendChild(submit);
  return root;
}

export function renderDone(): HTMLElement {
  const root = el("section", "screen done");
  root.appendChild(el("h1", undefined, "Thank you!"));
  root.appendChild(
    el("p", undefined, "Your ratings were recorded. You can close this window."),
  );
  return root;
}

export function renderRetry(message: string, onRetry: () => void): HTMLElement {
  const banner = el("div", "retry-banner");
  banner.appendChild(el("span", undefined, message));
  const button = el("button", "retry", "Retry");
  button.addEventListener("click", onRetry);
  banner.appendChild(button);
  return banner;
}
