async function m(a,e={}){let r=await(e.fetcher??fetch)(`${e.baseUrl??""}/api/compile`,{method:"POST",headers:{"content-type":"application/json"},body:JSON.stringify(a),signal:e.signal??null}),n=await r.json();return r.ok?{ok:!0,bundle:n}:{ok:!1,error:n}}var c=class{constructor(e=500,t=()=>Date.now()){this.windowMs=e;this.now=t}windowMs;now;pending=null;decode(e){if(e==="ArrowUp"||e==="ArrowDown")return this.pending=null,e==="ArrowUp"?"up":"down";if(e==="ArrowRight"||e==="ArrowLeft"){let t=this.now();return this.pending&&this.pending.key===e&&t-this.pending.at<=this.windowMs?(this.pending=null,e==="ArrowRight"?"right_right":"left_left"):(this.pending={key:e,at:t},null)}return this.pending=null,null}};var u=class{byId=new Map;levels=new Map;constructor(e){for(let r of e.nodes)this.byId.set(r.id,r);let t=[e.initial_cursor];for(;t.length>0;){let r=t.shift(),n=this.byId.get(r);if(!n)continue;let i=this.levels.get(n.depth)??[];i.push(r),this.levels.set(n.depth,i),n.left!==null&&t.push(n.left),n.right!==null&&t.push(n.right)}}node(e){let t=this.byId.get(e);if(!t)throw new Error(`unknown node ${e}`);return t}children(e){let t=this.node(e);return[t.left,t.right].filter(r=>r!==null)}isLeaf(e){return this.children(e).length===0}ancestors(e){let t=[],r=this.node(e).parent;for(;r!==null;)t.push(r),r=this.node(r).parent;return t}sibling(e,t){let r=this.node(e).parent;if(r===null)return null;let n=this.children(r),i=n.indexOf(e)+t;return i>=0&&i<n.length?n[i]:null}levelNeighbor(e,t){let r=this.levels.get(this.node(e).depth)??[],n=r.indexOf(e)+t;return n>=0&&n<r.length?r[n]:null}};function f(a){let e=new u(a),t=a.initial_cursor;return{cursor:t,expanded:new Set(e.isLeaf(t)?[]:[t])}}function b(a,e,t){let r=new u(a),n=e.cursor;if(t==="right_right"){let o=r.children(n);return o.length===0?e:{cursor:o[0],expanded:new Set([...e.expanded,n])}}if(t==="left_left"){let o=r.node(n).parent;if(o===null)return e;let l=new Set(r.children(o)),d=new Set([...e.expanded].filter(C=>!l.has(C)));return{cursor:o,expanded:d}}let i=t==="up"?-1:1,s=r.sibling(n,i)??r.levelNeighbor(n,i);return s===null?e:{cursor:s,expanded:new Set([...e.expanded,...r.ancestors(s)])}}function S(a){let e="";for(let t of a)e+=String.fromCharCode(t);return btoa(e).replaceAll("+","-").replaceAll("/","_").replace(/=+$/,"")}function w(a){let e=a.replaceAll("-","+").replaceAll("_","/"),t=atob(e+"=".repeat((4-e.length%4)%4));return Uint8Array.from(t,r=>r.charCodeAt(0))}async function y(a,e){let t=new Blob([a]).stream().pipeThrough(e);return new Uint8Array(await new Response(t).arrayBuffer())}async function p(a){let e=new TextEncoder().encode(JSON.stringify(a));if(typeof CompressionStream=="function"){let t=await y(e,new CompressionStream("deflate-raw"));return"d."+S(t)}return"u."+S(e)}async function E(a){let e=a.startsWith("#")?a.slice(1):a;try{let t;if(e.startsWith("d."))t=await y(w(e.slice(2)),new DecompressionStream("deflate-raw"));else if(e.startsWith("u."))t=w(e.slice(2));else return null;let r=JSON.parse(new TextDecoder().decode(t));return typeof r.source!="string"?null:{source:r.source,language:r.language??"mermaid",structure:r.structure??"binary_tree",title:r.title??"",description:r.description??""}}catch{return null}}function x(a,e,t){let r=new URL(a);return r.hash=e,t?r.searchParams.set("mode","preview"):r.searchParams.delete("mode"),r.toString()}var g="arbor.favorites";function h(a=localStorage){try{let e=a.getItem(g),t=e?JSON.parse(e):[];return Array.isArray(t)?t:[]}catch{return[]}}function T(a,e,t=localStorage){let r=h(t).filter(n=>n.name!==a);return r.push({name:a,encoded:e,savedAt:new Date().toISOString()}),t.setItem(g,JSON.stringify(r)),r}function M(a,e=localStorage){let t=h(e).filter(r=>r.name!==a);return e.setItem(g,JSON.stringify(t)),t}var A=300,O=`flowchart TD
A((3))
A -->B((1))
B --> C((0))
B --> D((2))
A -->E((6))
E --> F((4))
`,_=`
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
`,v=class{state;root;fetcher;storage;debounceMs;doublePressWindowMs;baseUrl;debounceTimer=null;inFlight=null;requestCounter=0;navModel=null;navState=null;pendingCompile=Promise.resolve();constructor(e){this.root=e.root,this.fetcher=e.fetcher,this.storage=e.storage??localStorage,this.debounceMs=e.debounceMs??A,this.doublePressWindowMs=e.doublePressWindowMs??500,this.baseUrl=e.baseUrl??"",this.state={source:e.initial?.source??O,language:e.initial?.language??"mermaid",structure:e.initial?.structure??"binary_tree",title:e.initial?.title??"",description:e.initial?.description??"",activeTab:"navigable",mode:e.mode??"editor",bundle:null,generation:0,error:null,offline:!1,stale:!1},this.buildDom(),this.scheduleCompile()}$(e){let t=this.root.querySelector(e);if(!t)throw new Error(`missing editor element ${e}`);return t}buildDom(){this.root.innerHTML=_,this.root.classList.add("arbor-editor",this.state.mode),this.$("#mode-label").textContent=this.state.mode==="preview"?"Preview":"Editor",this.state.mode==="preview"&&(this.$("#input-pane").hidden=!0,this.$("#details-pane").hidden=!0);let e=this.$("#source");e.value=this.state.source,e.addEventListener("input",()=>{this.state.source=e.value,this.scheduleCompile()});let t=this.$("#language");t.value=this.state.language,t.addEventListener("change",()=>{this.state.language=t.value,this.scheduleCompile()});let r=this.$("#structure");r.value=this.state.structure,r.addEventListener("change",()=>{this.state.structure=r.value,this.scheduleCompile()});let n=this.$("#title");n.value=this.state.title,n.addEventListener("input",()=>{this.state.title=n.value,this.scheduleCompile()});let i=this.$("#description");i.value=this.state.description,i.addEventListener("input",()=>{this.state.description=i.value,this.scheduleCompile()});let s=this.$("#representation");s.value=this.state.activeTab,s.addEventListener("change",()=>{this.state.activeTab=s.value,this.showActiveTab()}),this.$("#share-button").addEventListener("click",()=>{this.shareUrl().then(o=>{this.$("#share-url").value=o,navigator.clipboard?.writeText(o).catch(()=>{})})}),this.$("#favorite-form").addEventListener("submit",o=>{o.preventDefault();let l=this.$("#favorite-name").value.trim();l&&p(this.sharedState()).then(d=>{T(l,d,this.storage),this.renderFavorites()})}),this.renderFavorites(),this.showActiveTab()}sharedState(){let{source:e,language:t,structure:r,title:n,description:i}=this.state;return{source:e,language:t,structure:r,title:n,description:i}}scheduleCompile(){this.debounceTimer!==null&&clearTimeout(this.debounceTimer),this.debounceTimer=setTimeout(()=>{this.debounceTimer=null,this.pendingCompile=this.compileNow()},this.debounceMs)}async idle(){await this.pendingCompile}async compileNow(){this.inFlight?.abort();let e=new AbortController;this.inFlight=e;let t=++this.requestCounter;try{let r=await m({source:this.state.source,language:this.state.language,structure:this.state.structure,format:["tabular","navigable","tactile","ir","description"],...this.state.title?{title:this.state.title}:{},...this.state.description?{description:this.state.description}:{}},{fetcher:this.fetcher,signal:e.signal,baseUrl:this.baseUrl});if(t!==this.requestCounter)return;this.state.offline=!1,r.ok?(this.state.bundle=r.bundle,this.state.generation+=1,this.state.error=null,this.state.stale=!1,this.applyBundle(r.bundle,this.state.generation)):(this.state.error=r.error,this.state.stale=this.state.bundle!==null)}catch{if(e.signal.aborted||t!==this.requestCounter)return;this.state.offline=!0}finally{this.inFlight===e&&(this.inFlight=null),this.renderBanners()}}applyBundle(e,t){this.$("#structure-description").textContent=e.description,this.$("#ir-json").textContent=e.ir_json;let r=this.$("#panel-tabular");r.innerHTML=e.tabular?.html??"",r.dataset.generation=String(t);let n=this.$("#panel-navigable");n.innerHTML=e.navigable?.html??"",n.dataset.generation=String(t),this.bindTreeKeyboard(n);let i=this.$("#panel-tactile"),s=this.$("#tactile-svg");s.innerHTML=e.tactile?.svg.replace(/^<\?xml[^>]*\?>\s*/,"")??"",i.dataset.generation=String(t);let o=this.$("#download-svg");e.tactile?(o.hidden=!1,o.href="data:image/svg+xml;charset=utf-8,"+encodeURIComponent(e.tactile.svg)):o.hidden=!0,this.showActiveTab()}renderBanners(){let e=this.$("#error-banner");if(this.state.error){let{code:t,message:r,line:n,column:i}=this.state.error,s=n!==null?` (line ${n}, column ${i??"?"})`:"";e.textContent=`${t}: ${r}${s}`,e.hidden=!1}else e.hidden=!0;this.$("#offline-banner").hidden=!this.state.offline,this.$("#stale-indicator").hidden=!this.state.stale}showActiveTab(){for(let e of["tabular","navigable","tactile"])this.$(`#panel-${e}`).hidden=e!==this.state.activeTab}bindTreeKeyboard(e){let t=e.querySelector('[data-structure="binary_tree"]');if(this.navModel=null,this.navState=null,!t)return;let r=JSON.parse(t.dataset.navModel??"null");if(!r)return;this.navModel=r,this.navState=f(r);let n=new c(this.doublePressWindowMs);t.addEventListener("keydown",i=>{let s=n.decode(i.key);i.key.startsWith("Arrow")&&i.preventDefault(),!(!s||!this.navModel||!this.navState)&&(this.navState=b(this.navModel,this.navState,s),this.applyNavState(!0))}),t.addEventListener("click",i=>{let s=i.target.closest('[role="treeitem"]');if(!s||!this.navModel||!this.navState)return;let o=s.id.replace(/^arbor-item-/,""),l=new u(this.navModel);this.navState={cursor:o,expanded:new Set([...this.navState.expanded,...l.ancestors(o)])},this.applyNavState(!0)}),this.applyNavState(!1)}applyNavState(e){if(!this.navModel||!this.navState)return;let t=this.$("#panel-navigable"),{cursor:r,expanded:n}=this.navState;for(let i of this.navModel.nodes){let s=t.querySelector(`#arbor-item-${i.id}`);if(!s)continue;let o=i.left!==null||i.right!==null,l=n.has(i.id);if(o){s.setAttribute("aria-expanded",l?"true":"false");let d=s.querySelector('[role="group"]');d&&(d.hidden=!l)}s.tabIndex=i.id===r?0:-1,e&&i.id===r&&s.focus()}}navSnapshot(){return this.navState?{cursor:this.navState.cursor,expanded:[...this.navState.expanded].sort()}:null}async shareUrl(){let e=await p(this.sharedState()),t=typeof location<"u"?location.href:"http://localhost/";return x(t,e,this.state.mode==="preview")}renderFavorites(){let e=this.$("#favorites-list");e.innerHTML="";for(let t of h(this.storage)){let r=document.createElement("li"),n=document.createElement("a");n.href=`#${t.encoded}`,n.textContent=t.name;let i=document.createElement("button");i.type="button",i.textContent="Remove",i.addEventListener("click",()=>{M(t.name,this.storage),this.renderFavorites()}),r.append(n," ",i),e.append(r)}}};function N(a){return new v(a)}async function $(){let a=document.getElementById("app");if(!a)throw new Error("missing #app mount point");let t=new URLSearchParams(location.search).get("mode")==="preview"?"preview":"editor",r=location.hash?await E(location.hash):null;N({root:a,mode:t,initial:r??{}})}$();
