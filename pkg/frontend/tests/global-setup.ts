/**
 * Boots a real API server once for the whole test run. The UI tests are
 * end-to-end against it: nothing is mocked below the fetch boundary.
 */
import { spawn, type ChildProcess } from "node:child_process";
import { BASE_URL, PORT } from "./config.js";

async function waitForHealth(deadlineMs: number): Promise<void> {
  const deadline = Date.now() + deadlineMs;
  let lastError: unknown = null;
  while (Date.now() < deadline) {
    try {
      const response = await fetch(`${BASE_URL}/healthz`);
      if (response.ok) return;
    } catch (error) {
      lastError = error;
    }
    await new Promise((resolve) => setTimeout(resolve, 200));
  }
  throw new Error(`API server did not come up on port ${PORT}: ${String(lastError)}`);
}

export default async function setup(): Promise<() => Promise<void>> {
  const server: ChildProcess = spawn("artemus", ["serve", "--port", String(PORT)], {
    stdio: "ignore",
  });
  const exited = new Promise<void>((resolve) => {
    server.on("exit", () => resolve());
  });
  try {
    await waitForHealth(30000);
  } catch (error) {
    server.kill("SIGTERM");
    throw error;
  }
  return async () => {
    server.kill("SIGTERM");
    await Promise.race([exited, new Promise((resolve) => setTimeout(resolve, 3000))]);
    if (server.exitCode === null) server.kill("SIGKILL");
  };
}
