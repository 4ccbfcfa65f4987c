// Share links and local favorites. The whole editor state travels in the
// URL fragment — deflate-compressed and base64url-encoded — so restoring a
// link needs no server support beyond recompiling the source.

export interface SharedState {
  source: string;
  language: string;
  structure: string;
  title: string;
  description: string;
}

const COMPRESSED_PREFIX = "d.";
const PLAIN_PREFIX = "u.";

function toBase64Url(bytes: Uint8Array): string {
  let bin = "";
  for (const b of bytes) bin += String.fromCharCode(b);
  return btoa(bin).replaceAll("+", "-").replaceAll("/", "_").replace(/=+$/, "");
}

function fromBase64Url(text: string): Uint8Array {
  const b64 = text.replaceAll("-", "+").replaceAll("_", "/");
  const bin = atob(b64 + "=".repeat((4 - (b64.length % 4)) % 4));
  return Uint8Array.from(bin, (ch) => ch.charCodeAt(0));
}

async function pipe(bytes: Uint8Array, transform: GenericTransformStream): Promise<Uint8Array> {
  const stream = new Blob([bytes as BlobPart]).stream().pipeThrough(transform);
  return new Uint8Array(await new Response(stream).arrayBuffer());
}

export async function encodeState(state: SharedState): Promise<string> {
  const raw = new TextEncoder().encode(JSON.stringify(state));
  if (typeof CompressionStream === "function") {
    const packed = await pipe(raw, new CompressionStream("deflate-raw"));
    return COMPRESSED_PREFIX + toBase64Url(packed);
  }
  return PLAIN_PREFIX + toBase64Url(raw);
}

export async function decodeState(fragment: string): Promise<SharedState | null> {
  const text = fragment.startsWith("#") ? fragment.slice(1) : fragment;
  try {
    let raw: Uint8Array;
    if (text.startsWith(COMPRESSED_PREFIX)) {
      raw = await pipe(fromBase64Url(text.slice(2)), new DecompressionStream("deflate-raw"));
    } else if (text.startsWith(PLAIN_PREFIX)) {
      raw = fromBase64Url(text.slice(2));
    } else {
      return null;
    }
    const parsed = JSON.parse(new TextDecoder().decode(raw));
    if (typeof parsed.source !== "string") return null;
    return {
      source: parsed.source,
      language: parsed.language ?? "mermaid",
      structure: parsed.structure ?? "binary_tree",
      title: parsed.title ?? "",
      description: parsed.description ?? "",
    };
  } catch {
    return null;
  }
}

export function buildShareUrl(base: string, encoded: string, preview: boolean): string {
  const url = new URL(base);
  url.hash = encoded;
  if (preview) {
    url.searchParams.set("mode", "preview");
  } else {
    url.searchParams.delete("mode");
  }
  return url.toString();
}

// --- favorites (browser-local only) ---

export interface Favorite {
  name: string;
  encoded: string;
  savedAt: string;
}

const FAVORITES_KEY = "arbor.favorites";

export function listFavorites(storage: Storage = localStorage): Favorite[] {
  try {
    const raw = storage.getItem(FAVORITES_KEY);
    const parsed = raw ? JSON.parse(raw) : [];
    return Array.isArray(parsed) ? parsed : [];
  } catch {
    return [];
  }
}

export function saveFavorite(name: string, encoded: string, storage: Storage = localStorage): Favorite[] {
  const favorites = listFavorites(storage).filter((f) => f.name !== name);
  favorites.push({ name, encoded, savedAt: new Date().toISOString() });
  storage.setItem(FAVORITES_KEY, JSON.stringify(favorites));
  return favorites;
}

export function removeFavorite(name: string, storage: Storage = localStorage): Favorite[] {
  const favorites = listFavorites(storage).filter((f) => f.name !== name);
  storage.setItem(FAVORITES_KEY, JSON.stringify(favorites));
  return favorites;
}
