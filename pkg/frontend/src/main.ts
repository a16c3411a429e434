import { ApiClient } from "./api.js";
import { mount } from "./app.js";

// served at /ui/ by the test service; ?test=<id> picks the experiment
const params = new URLSearchParams(window.location.search);
const testId = params.get("test") ?? "paper-layout";
const root = document.getElementById("app");
if (root) {
  mount(root, { testId, api: new ApiClient("") });
}
