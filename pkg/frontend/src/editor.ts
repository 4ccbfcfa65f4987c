// The three-pane editor: input (source + selectors), output (one of three
// synchronized representations), details (metadata, IR JSON, favorites).
// Preview mode hides the input and details panes entirely.
//
// Compiles are debounced and versioned: a response only lands if it belongs
// to the newest request, so all tabs always show one compile generation.
// A failed compile keeps the previous outputs visible with a stale marker
// and a positioned error banner; a network failure shows an offline banner
// and the next edit retries.

import { compile, type CompileError, type OutputBundle } from "./api";
import { ArrowKeyDecoder, DOUBLE_PRESS_WINDOW_MS } from "./keys";
import { initialState, navStep, TreeIndex, type NavModel, type NavState } from "./nav";
import {
  buildShareUrl,
  encodeState,
  listFavorites,
  removeFavorite,
  saveFavorite,
  type SharedState,
} from "./share";

export type EditorMode = "editor" | "preview";
export type RepresentationTab = "tabular" | "navigable" | "tactile";

export interface EditorState extends SharedState {
  activeTab: RepresentationTab;
  mode: EditorMode;
  bundle: OutputBundle | null;
  generation: number;
  error: CompileError | null;
  offline: boolean;
  stale: boolean;
}

export interface EditorOptions {
  root: HTMLElement;
  mode?: EditorMode;
  initial?: Partial<SharedState>;
  fetcher?: typeof fetch;
  storage?: Storage;
  debounceMs?: number;
  doublePressWindowMs?: number;
  baseUrl?: string;
}

const DEBOUNCE_MS = 300;

const DEFAULT_SOURCE = `flowchart TD
A((3))
A -->B((1))
B --> C((0))
B --> D((2))
A -->E((6))
E --> F((4))
`;

const TEMPLATE = `
<header class="toolbar">
  <h1>Diagram editor</h1>
  <span id="mode-label"></span>
  <button type="button" id="share-button">Copy share link</button>
  <output id="share-url" aria-live="polite"></output>
</header>
<main class="panes">
  <section id="input-pane" class="pane" aria-label="Input">
    <h2>Input</h2>
    <label>Language
      <select id="language">
        <option value="mermaid">Mermaid</option>
        <option value="dot">Graphviz DOT</option>
      </select>
    </label>
    <label>Structure
      <select id="structure">
        <option value="binary_tree">Binary tree</option>
        <option value="array">Array</option>
      </select>
    </label>
    <label>Source
      <textarea id="source" rows="16" spellcheck="false"></textarea>
    </label>
  </section>
  <section id="output-pane" class="pane" aria-label="Output">
    <h2>Output</h2>
    <label>Representation
      <select id="representation">
        <option value="tabular">Tabular</option>
        <option value="navigable">Navigable</option>
        <option value="tactile">Tactile</option>
      </select>
    </label>
    <div id="error-banner" class="banner error" role="alert" hidden></div>
    <div id="offline-banner" class="banner offline" role="alert" hidden>
      Cannot reach the compile service; keep editing and it will retry.
    </div>
    <p id="stale-indicator" class="stale" hidden>
      Showing the last successful compile; the current source has errors.
    </p>
    <p id="structure-description"></p>
    <div id="panel-tabular" class="panel" data-generation="0"></div>
    <div id="panel-navigable" class="panel" data-generation="0"></div>
    <div id="panel-tactile" class="panel" data-generation="0">
      <div id="tactile-svg"></div>
      <a id="download-svg" download="diagram.svg" hidden>Download SVG for embossing</a>
    </div>
  </section>
  <section id="details-pane" class="pane" aria-label="Details">
    <h2>Details</h2>
    <label>Title <input id="title" type="text"></label>
    <label>Description <textarea id="description" rows="3"></textarea></label>
    <h3>IR</h3>
    <pre id="ir-json" tabindex="0"></pre>
    <h3>Favorites</h3>
    <form id="favorite-form">
      <label>Name <input id="favorite-name" type="text" required></label>
      <button type="submit">Save favorite</button>
    </form>
    <ul id="favorites-list"></ul>
  </section>
</main>
`;

export class Editor {
  readonly state: EditorState;
  private readonly root: HTMLElement;
  private readonly fetcher: typeof fetch | undefined;
  private readonly storage: Storage;
  private readonly debounceMs: number;
  private readonly doublePressWindowMs: number;
  private readonly baseUrl: string;
  private debounceTimer: ReturnType<typeof setTimeout> | null = null;
  private inFlight: AbortController | null = null;
  private requestCounter = 0;
  private navModel: NavModel | null = null;
  private navState: NavState | null = null;
  private pendingCompile: Promise<void> = Promise.resolve();

  constructor(options: EditorOptions) {
    this.root = options.root;
    this.fetcher = options.fetcher;
    this.storage = options.storage ?? localStorage;
    this.debounceMs = options.debounceMs ?? DEBOUNCE_MS;
    this.doublePressWindowMs = options.doublePressWindowMs ?? DOUBLE_PRESS_WINDOW_MS;
    this.baseUrl = options.baseUrl ?? "";
    this.state = {
      source: options.initial?.source ?? DEFAULT_SOURCE,
      language: options.initial?.language ?? "mermaid",
      structure: options.initial?.structure ?? "binary_tree",
      title: options.initial?.title ?? "",
      description: options.initial?.description ?? "",
      activeTab: "navigable",
      mode: options.mode ?? "editor",
      bundle: null,
      generation: 0,
      error: null,
      offline: false,
      stale: false,
    };
    this.buildDom();
    this.scheduleCompile();
  }

  // --- DOM scaffolding ---

  private $<T extends HTMLElement>(selector: string): T {
    const el = this.root.querySelector<T>(selector);
    if (!el) throw new Error(`missing editor element ${selector}`);
    return el;
  }

  private buildDom(): void {
    this.root.innerHTML = TEMPLATE;
    this.root.classList.add("arbor-editor", this.state.mode);
    this.$("#mode-label").textContent =
      this.state.mode === "preview" ? "Preview" : "Editor";
    if (this.state.mode === "preview") {
      this.$("#input-pane").hidden = true;
      this.$("#details-pane").hidden = true;
    }

    const source = this.$<HTMLTextAreaElement>("#source");
    source.value = this.state.source;
    source.addEventListener("input", () => {
      this.state.source = source.value;
      this.scheduleCompile();
    });

    const language = this.$<HTMLSelectElement>("#language");
    language.value = this.state.language;
    language.addEventListener("change", () => {
      this.state.language = language.value;
      this.scheduleCompile();
    });

    const structure = this.$<HTMLSelectElement>("#structure");
    structure.value = this.state.structure;
    structure.addEventListener("change", () => {
      this.state.structure = structure.value;
      this.scheduleCompile();
    });

    const title = this.$<HTMLInputElement>("#title");
    title.value = this.state.title;
    title.addEventListener("input", () => {
      this.state.title = title.value;
      this.scheduleCompile();
    });

    const description = this.$<HTMLTextAreaElement>("#description");
    description.value = this.state.description;
    description.addEventListener("input", () => {
      this.state.description = description.value;
      this.scheduleCompile();
    });

    const representation = this.$<HTMLSelectElement>("#representation");
    representation.value = this.state.activeTab;
    representation.addEventListener("change", () => {
      this.state.activeTab = representation.value as RepresentationTab;
      this.showActiveTab();
    });

    this.$("#share-button").addEventListener("click", () => {
      void this.shareUrl().then((url) => {
        this.$<HTMLOutputElement>("#share-url").value = url;
        void navigator.clipboard?.writeText(url).catch(() => undefined);
      });
    });

    this.$("#favorite-form").addEventListener("submit", (event) => {
      event.preventDefault();
      const name = this.$<HTMLInputElement>("#favorite-name").value.trim();
      if (!name) return;
      void encodeState(this.sharedState()).then((encoded) => {
        saveFavorite(name, encoded, this.storage);
        this.renderFavorites();
      });
    });

    this.renderFavorites();
    this.showActiveTab();
  }

  private sharedState(): SharedState {
    const { source, language, structure, title, description } = this.state;
    return { source, language, structure, title, description };
  }

  // --- compiling ---

  private scheduleCompile(): void {
    if (this.debounceTimer !== null) clearTimeout(this.debounceTimer);
    this.debounceTimer = setTimeout(() => {
      this.debounceTimer = null;
      this.pendingCompile = this.compileNow();
    }, this.debounceMs);
  }

  /** Resolves when the most recently scheduled compile has settled. */
  async idle(): Promise<void> {
    await this.pendingCompile;
  }

  async compileNow(): Promise<void> {
    this.inFlight?.abort();
    const controller = new AbortController();
    this.inFlight = controller;
    const requestId = ++this.requestCounter;
    try {
      const result = await compile(
        {
          source: this.state.source,
          language: this.state.language,
          structure: this.state.structure,
          format: ["tabular", "navigable", "tactile", "ir", "description"],
          ...(this.state.title ? { title: this.state.title } : {}),
          ...(this.state.description ? { description: this.state.description } : {}),
        },
        { fetcher: this.fetcher, signal: controller.signal, baseUrl: this.baseUrl },
      );
      if (requestId !== this.requestCounter) return; // a newer edit superseded us
      this.state.offline = false;
      if (result.ok) {
        this.state.bundle = result.bundle;
        this.state.generation += 1;
        this.state.error = null;
        this.state.stale = false;
        this.applyBundle(result.bundle, this.state.generation);
      } else {
        this.state.error = result.error;
        this.state.stale = this.state.bundle !== null;
      }
    } catch (err) {
      if (controller.signal.aborted || requestId !== this.requestCounter) return;
      this.state.offline = true; // retried on the next edit
    } finally {
      if (this.inFlight === controller) this.inFlight = null;
      this.renderBanners();
    }
  }

  private applyBundle(bundle: OutputBundle, generation: number): void {
    this.$("#structure-description").textContent = bundle.description;
    this.$("#ir-json").textContent = bundle.ir_json;

    const tabular = this.$("#panel-tabular");
    tabular.innerHTML = bundle.tabular?.html ?? "";
    tabular.dataset.generation = String(generation);

    const navigable = this.$("#panel-navigable");
    navigable.innerHTML = bundle.navigable?.html ?? "";
    navigable.dataset.generation = String(generation);
    this.bindTreeKeyboard(navigable);

    const tactile = this.$("#panel-tactile");
    const svgHost = this.$("#tactile-svg");
    svgHost.innerHTML = bundle.tactile?.svg.replace(/^<\?xml[^>]*\?>\s*/, "") ?? "";
    tactile.dataset.generation = String(generation);
    const download = this.$<HTMLAnchorElement>("#download-svg");
    if (bundle.tactile) {
      download.hidden = false;
      download.href =
        "data:image/svg+xml;charset=utf-8," + encodeURIComponent(bundle.tactile.svg);
    } else {
      download.hidden = true;
    }
    this.showActiveTab();
  }

  private renderBanners(): void {
    const error = this.$("#error-banner");
    if (this.state.error) {
      const { code, message, line, column } = this.state.error;
      const where = line !== null ? ` (line ${line}, column ${column ?? "?"})` : "";
      error.textContent = `${code}: ${message}${where}`;
      error.hidden = false;
    } else {
      error.hidden = true;
    }
    this.$("#offline-banner").hidden = !this.state.offline;
    this.$("#stale-indicator").hidden = !this.state.stale;
  }

  private showActiveTab(): void {
    for (const tab of ["tabular", "navigable", "tactile"] as const) {
      this.$(`#panel-${tab}`).hidden = tab !== this.state.activeTab;
    }
  }

  // --- keyboard navigation of the tree widget ---

  private bindTreeKeyboard(panel: HTMLElement): void {
    const widget = panel.querySelector<HTMLElement>('[data-structure="binary_tree"]');
    this.navModel = null;
    this.navState = null;
    if (!widget) return;
    const model = JSON.parse(widget.dataset.navModel ?? "null") as NavModel | null;
    if (!model) return;
    this.navModel = model;
    this.navState = initialState(model);
    const decoder = new ArrowKeyDecoder(this.doublePressWindowMs);
    widget.addEventListener("keydown", (event) => {
      const cmd = decoder.decode(event.key);
      if (event.key.startsWith("Arrow")) event.preventDefault();
      if (!cmd || !this.navModel || !this.navState) return;
      this.navState = navStep(this.navModel, this.navState, cmd);
      this.applyNavState(true);
    });
    widget.addEventListener("click", (event) => {
      const item = (event.target as HTMLElement).closest<HTMLElement>('[role="treeitem"]');
      if (!item || !this.navModel || !this.navState) return;
      const id = item.id.replace(/^arbor-item-/, "");
      const index = new TreeIndex(this.navModel);
      this.navState = {
        cursor: id,
        expanded: new Set([...this.navState.expanded, ...index.ancestors(id)]),
      };
      this.applyNavState(true);
    });
    this.applyNavState(false);
  }

  private applyNavState(moveFocus: boolean): void {
    if (!this.navModel || !this.navState) return;
    const panel = this.$("#panel-navigable");
    const { cursor, expanded } = this.navState;
    for (const node of this.navModel.nodes) {
      const item = panel.querySelector<HTMLElement>(`#arbor-item-${node.id}`);
      if (!item) continue;
      const isInternal = node.left !== null || node.right !== null;
      const isExpanded = expanded.has(node.id);
      if (isInternal) {
        item.setAttribute("aria-expanded", isExpanded ? "true" : "false");
        const group = item.querySelector<HTMLElement>('[role="group"]');
        if (group) group.hidden = !isExpanded;
      }
      item.tabIndex = node.id === cursor ? 0 : -1;
      if (moveFocus && node.id === cursor) item.focus();
    }
  }

  /** Snapshot of the tree widget's navigation state (for tests). */
  navSnapshot(): { cursor: string; expanded: string[] } | null {
    if (!this.navState) return null;
    return { cursor: this.navState.cursor, expanded: [...this.navState.expanded].sort() };
  }

  // --- sharing and favorites ---

  async shareUrl(): Promise<string> {
    const encoded = await encodeState(this.sharedState());
    const base = typeof location !== "undefined" ? location.href : "http://localhost/";
    return buildShareUrl(base, encoded, this.state.mode === "preview");
  }

  private renderFavorites(): void {
    const list = this.$("#favorites-list");
    list.innerHTML = "";
    for (const favorite of listFavorites(this.storage)) {
      const item = document.createElement("li");
      const open = document.createElement("a");
      open.href = `#${favorite.encoded}`;
      open.textContent = favorite.name;
      const remove = document.createElement("button");
      remove.type = "button";
      remove.textContent = "Remove";
      remove.addEventListener("click", () => {
        removeFavorite(favorite.name, this.storage);
        this.renderFavorites();
      });
      item.append(open, " ", remove);
      list.append(item);
    }
  }
}

export function createEditor(options: EditorOptions): Editor {
  return new Editor(options);
}
