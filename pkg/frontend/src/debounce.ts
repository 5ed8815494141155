// Trailing-edge debounce for slider drags.
export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  waitMs: number,
): (...args: A) => void {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    if (timer !== undefined) {
      clearTimeout(timer);
    }
    timer = setTimeout(() => {
      timer = undefined;
      fn(...args);
    }, waitMs);
  };
}

// At most one task in flight; while one runs, only the newest submission
// is remembered and started once the current task settles.
export function serialLatest(): (task: () => Promise<void>) => void {
  let inFlight = false;
  let queued: (() => Promise<void>) | undefined;

  const run = (task: () => Promise<void>): void => {
    if (inFlight) {
      queued = task;
      return;
    }
    inFlight = true;
    void task()
      .catch(() => {
        // tasks own their error handling; a rejection must not jam the queue
      })
      .finally(() => {
        inFlight = false;
        if (queued) {
          const next = queued;
          queued = undefined;
          run(next);
        }
      });
  };

  return run;
}
