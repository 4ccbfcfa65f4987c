import { describe, expect, it } from "vitest";

import {
  buildShareUrl,
  decodeState,
  encodeState,
  listFavorites,
  removeFavorite,
  saveFavorite,
  type SharedState,
} from "../src/share";

const sample: SharedState = {
  source: "flowchart TD\nA((3))\nA -->B((1))\n",
  language: "mermaid",
  structure: "binary_tree",
  title: "Lecture 4",
  description: "BST warm-up",
};

describe("share fragment codec", () => {
  it("round trips byte-identical state", async () => {
    const encoded = await encodeState(sample);
    expect(await decodeState(encoded)).toEqual(sample);
  });

  it("round trips through a hash fragment", async () => {
    const encoded = await encodeState(sample);
    expect(await decodeState(`#${encoded}`)).toEqual(sample);
  });

  it("compresses with deflate when available", async () => {
    const encoded = await encodeState(sample);
    expect(encoded.startsWith("d.")).toBe(true);
    expect(encoded).not.toContain("+");
    expect(encoded).not.toContain("/");
    expect(encoded).not.toContain("=");
  });

  it("rejects garbage fragments", async () => {
    expect(await decodeState("#nonsense")).toBeNull();
    expect(await decodeState("#d.!!!")).toBeNull();
    expect(await decodeState("")).toBeNull();
  });

  it("handles multi-byte source text", async () => {
    const state = { ...sample, title: "café Δέντρο" };
    expect(await decodeState(await encodeState(state))).toEqual(state);
  });
});

describe("buildShareUrl", () => {
  it("places the state in the fragment", async () => {
    const encoded = await encodeState(sample);
    const url = buildShareUrl("http://localhost:8000/", encoded, false);
    expect(new URL(url).hash).toBe(`#${encoded}`);
    expect(new URL(url).searchParams.get("mode")).toBeNull();
  });

  it("adds mode=preview when asked", async () => {
    const encoded = await encodeState(sample);
    const url = buildShareUrl("http://localhost:8000/", encoded, true);
    expect(new URL(url).searchParams.get("mode")).toBe("preview");
  });
});

describe("favorites", () => {
  it("saves, lists, overwrites by name, and removes", () => {
    localStorage.clear();
    expect(listFavorites()).toEqual([]);
    saveFavorite("quiz", "d.abc");
    saveFavorite("homework", "d.def");
    expect(listFavorites().map((f) => f.name)).toEqual(["quiz", "homework"]);
    saveFavorite("quiz", "d.xyz");
    const favorites = listFavorites();
    expect(favorites.map((f) => f.name)).toEqual(["homework", "quiz"]);
    expect(favorites.find((f) => f.name === "quiz")?.encoded).toBe("d.xyz");
    removeFavorite("homework");
    expect(listFavorites().map((f) => f.name)).toEqual(["quiz"]);
  });

  it("survives corrupted storage", () => {
    localStorage.setItem("arbor.favorites", "{broken json");
    expect(listFavorites()).toEqual([]);
  });
});
