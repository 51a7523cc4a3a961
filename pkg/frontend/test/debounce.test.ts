import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { debounce } from "../src/debounce.js";

describe("debounce", () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });
  afterEach(() => {
    vi.useRealTimers();
  });

  it("coalesces bursts into one trailing call with the last arguments", () => {
    const calls: string[] = [];
    const d = debounce((s: string) => calls.push(s), 120);
    d("r");
    vi.advanceTimersByTime(50);
    d("ra");
    vi.advanceTimersByTime(50);
    d("raj");
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(119);
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(1);
    expect(calls).toEqual(["raj"]);
  });

  it("fires again for a later burst", () => {
    const calls: string[] = [];
    const d = debounce((s: string) => calls.push(s), 120);
    d("a");
    vi.advanceTimersByTime(120);
    d("b");
    vi.advanceTimersByTime(120);
    expect(calls).toEqual(["a", "b"]);
  });

  it("cancel drops the pending call", () => {
    const calls: string[] = [];
    const d = debounce((s: string) => calls.push(s), 120);
    d("a");
    d.cancel();
    vi.advanceTimersByTime(1000);
    expect(calls).toEqual([]);
  });

  it("flush runs the pending call immediately", () => {
    const calls: string[] = [];
    const d = debounce((s: string) => calls.push(s), 120);
    d("a");
    d.flush();
    expect(calls).toEqual(["a"]);
    vi.advanceTimersByTime(1000);
    expect(calls).toEqual(["a"]); // not repeated
    d.flush(); // nothing pending: no-op
    expect(calls).toEqual(["a"]);
  });
});
