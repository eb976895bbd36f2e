import { createApp } from "./app.js";

const root = document.getElementById("app");
if (root) {
  const app = createApp(root);
  void app.actions.boot();
}
