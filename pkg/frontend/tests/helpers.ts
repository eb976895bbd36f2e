import type { FetchLike } from "../src/api.js";

/** Fetch wrapper that logs "METHOD /path" for every request it carries. */
export function recordingFetch(log: string[]): FetchLike {
  return (input, init) => {
    const method = init?.method ?? "GET";
    log.push(`${method} ${new URL(input).pathname}`);
    return fetch(input, init);
  };
}

/** Standalone Storage so tests never share state through jsdom's real one. */
export class MemoryStorage implements Storage {
  [name: string]: unknown;
  private items = new Map<string, string>();

  get length(): number {
    return this.items.size;
  }

  clear(): void {
    this.items.clear();
  }

  getItem(key: string): string | null {
    return this.items.has(key) ? (this.items.get(key) as string) : null;
  }

  key(index: number): string | null {
    return [...this.items.keys()][index] ?? null;
  }

  removeItem(key: string): void {
    this.items.delete(key);
  }

  setItem(key: string, value: string): void {
    this.items.set(key, value);
  }
}

export async function until(predicate: () => boolean, what = "condition", timeoutMs = 10000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (!predicate()) {
    if (Date.now() > deadline) throw new Error(`timed out waiting for ${what}`);
    await new Promise((resolve) => setTimeout(resolve, 20));
  }
}

export function click(root: ParentNode, selector: string): void {
  const element = root.querySelector<HTMLElement>(selector);
  if (!element) throw new Error(`no element matches ${selector}`);
  element.click();
}

export function textOf(root: ParentNode, selector: string): string {
  const element = root.querySelector(selector);
  if (!element) throw new Error(`no element matches ${selector}`);
  return element.textContent?.trim() ?? "";
}
