// Maps raw arrow keydowns to navigation commands. Horizontal commands
// require a double press of the same arrow inside the window; vertical
// arrows fire immediately. Any other key clears a pending half-press.

import type { NavCommandName } from "./nav";

export const DOUBLE_PRESS_WINDOW_MS = 500;

export class ArrowKeyDecoder {
  private pending: { key: string; at: number } | null = null;

  constructor(
    private readonly windowMs: number = DOUBLE_PRESS_WINDOW_MS,
    private readonly now: () => number = () => Date.now(),
  ) {}

  decode(key: string): NavCommandName | null {
    if (key === "ArrowUp" || key === "ArrowDown") {
      this.pending = null;
      return key === "ArrowUp" ? "up" : "down";
    }
    if (key === "ArrowRight" || key === "ArrowLeft") {
      const at = this.now();
      if (this.pending && this.pending.key === key && at - this.pending.at <= this.windowMs) {
        this.pending = null;
        return key === "ArrowRight" ? "right_right" : "left_left";
      }
      this.pending = { key, at };
      return null;
    }
    this.pending = null;
    return null;
  }
}
