import { createEditor } from "./editor";
import { decodeState } from "./share";

async function boot(): Promise<void> {
  const root = document.getElementById("app");
  if (!root) throw new Error("missing #app mount point");
  const params = new URLSearchParams(location.search);
  const mode = params.get("mode") === "preview" ? "preview" : "editor";
  const initial = location.hash ? await decodeState(location.hash) : null;
  createEditor({ root, mode, initial: initial ?? {} });
}

void boot();
