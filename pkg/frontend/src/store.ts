/** Minimal observable state container; the whole UI renders off one of these. */

export type Unsubscribe = () => void;

export class Store<S> {
  private listeners = new Set<() => void>();

  constructor(private state: S) {}

  get(): S {
    return this.state;
  }

  set(next: S): void {
    if (next === this.state) return;
    this.state = next;
    // Snapshot: a listener may unsubscribe others while we notify.
    for (const listener of [...this.listeners]) listener();
  }

  patch(partial: Partial<S>): void {
    this.set({ ...this.state, ...partial });
  }

  subscribe(listener: () => void): Unsubscribe {
    this.listeners.add(listener);
    return () => {
      this.listeners.delete(listener);
    };
  }
}
