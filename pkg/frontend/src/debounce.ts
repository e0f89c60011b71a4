// Keyed trailing-edge debouncer for drag-driven refetches.

export class KeyedDebouncer<K> {
  private timers = new Map<K, ReturnType<typeof setTimeout>>();

  constructor(readonly delayMs = 80) {}

  schedule(key: K, op: () => void): void {
    const pending = this.timers.get(key);
    if (pending !== undefined) clearTimeout(pending);
    this.timers.set(
      key,
      setTimeout(() => {
        this.timers.delete(key);
        op();
      }, this.delayMs),
    );
  }

  cancel(key: K): void {
    const pending = this.timers.get(key);
    if (pending !== undefined) {
      clearTimeout(pending);
      this.timers.delete(key);
    }
  }

  cancelAll(): void {
    for (const timer of this.timers.values()) clearTimeout(timer);
    this.timers.clear();
  }
}
