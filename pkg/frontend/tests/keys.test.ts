import { describe, expect, it } from "vitest";

import { ArrowKeyDecoder } from "../src/keys";

function decoderAt(times: number[]): ArrowKeyDecoder {
  const queue = [...times];
  return new ArrowKeyDecoder(500, () => queue.shift() ?? 0);
}

describe("ArrowKeyDecoder", () => {
  it("vertical arrows fire immediately", () => {
    const decoder = decoderAt([]);
    expect(decoder.decode("ArrowUp")).toBe("up");
    expect(decoder.decode("ArrowDown")).toBe("down");
  });

  it("double right within the window fires right_right", () => {
    const decoder = decoderAt([0, 400]);
    expect(decoder.decode("ArrowRight")).toBeNull();
    expect(decoder.decode("ArrowRight")).toBe("right_right");
  });

  it("double left within the window fires left_left", () => {
    const decoder = decoderAt([0, 500]);
    expect(decoder.decode("ArrowLeft")).toBeNull();
    expect(decoder.decode("ArrowLeft")).toBe("left_left");
  });

  it("two slow presses never fire", () => {
    const decoder = decoderAt([0, 501, 1200]);
    expect(decoder.decode("ArrowRight")).toBeNull();
    expect(decoder.decode("ArrowRight")).toBeNull(); // too late; re-arms
    expect(decoder.decode("ArrowRight")).toBeNull();
  });

  it("a slow second press re-arms the window", () => {
    const decoder = decoderAt([0, 600, 700]);
    expect(decoder.decode("ArrowRight")).toBeNull();
    expect(decoder.decode("ArrowRight")).toBeNull();
    expect(decoder.decode("ArrowRight")).toBe("right_right"); // 600 -> 700
  });

  it("mixed arrows do not combine", () => {
    const decoder = decoderAt([0, 10]);
    expect(decoder.decode("ArrowRight")).toBeNull();
    expect(decoder.decode("ArrowLeft")).toBeNull();
  });

  it("vertical arrows clear a pending half-press", () => {
    const decoder = decoderAt([0, 10]);
    expect(decoder.decode("ArrowRight")).toBeNull();
    expect(decoder.decode("ArrowUp")).toBe("up");
    expect(decoder.decode("ArrowRight")).toBeNull();
  });

  it("other keys clear a pending half-press", () => {
    const decoder = decoderAt([0, 10]);
    expect(decoder.decode("ArrowLeft")).toBeNull();
    expect(decoder.decode("a")).toBeNull();
    expect(decoder.decode("ArrowLeft")).toBeNull();
  });
});
