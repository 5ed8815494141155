import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { debounce, serialLatest } from "../src/debounce.js";

describe("debounce", () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });

  afterEach(() => {
    vi.useRealTimers();
  });

  it("fires once on the trailing edge", () => {
    const calls: number[] = [];
    const fn = debounce((n: number) => calls.push(n), 100);
    fn(1);
    fn(2);
    fn(3);
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(99);
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(1);
    expect(calls).toEqual([3]);
  });

  it("restarts the wait on every call", () => {
    const calls: string[] = [];
    const fn = debounce((s: string) => calls.push(s), 100);
    fn("a");
    vi.advanceTimersByTime(60);
    fn("b");
    vi.advanceTimersByTime(60);
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(40);
    expect(calls).toEqual(["b"]);
  });

  it("separate quiet periods fire separately", () => {
    const calls: number[] = [];
    const fn = debounce((n: number) => calls.push(n), 50);
    fn(1);
    vi.advanceTimersByTime(50);
    fn(2);
    vi.advanceTimersByTime(50);
    expect(calls).toEqual([1, 2]);
  });
});

describe("serialLatest", () => {
  it("keeps at most one task in flight and drops stale ones", async () => {
    const run = serialLatest();
    let active = 0;
    let peak = 0;
    const finished: number[] = [];
    const resolvers: (() => void)[] = [];

    const task = (id: number) => () => {
      active += 1;
      peak = Math.max(peak, active);
      return new Promise<void>((resolve) => {
        resolvers.push(() => {
          active -= 1;
          finished.push(id);
          resolve();
        });
      });
    };

    run(task(1));
    run(task(2));
    run(task(3));
    run(task(4));
    expect(active).toBe(1);

    resolvers[0]!();
    await Promise.resolve();
    await Promise.resolve();
    expect(active).toBe(1);

    resolvers[1]!();
    await Promise.resolve();
    await Promise.resolve();

    expect(peak).toBe(1);
    // 2 and 3 were superseded before they ever started
    expect(finished).toEqual([1, 4]);
  });

  it("runs follow-up tasks after a failure", async () => {
    const run = serialLatest();
    const log: string[] = [];
    run(() => {
      log.push("boom");
      return Promise.reject(new Error("boom"));
    });
    await Promise.resolve();
    await Promise.resolve();
    run(() => {
      log.push("next");
      return Promise.resolve();
    });
    await Promise.resolve();
    expect(log).toEqual(["boom", "next"]);
  });
});
