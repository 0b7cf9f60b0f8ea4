export * from "./commands.js";
export * from "./events.js";
export * from "./keyboard.js";
export * from "./gamepad.js";
export * from "./highlight.js";
export * from "./announcer.js";
export * from "./audio.js";
export * from "./view.js";
export * from "./review.js";
export * from "./dataset.js";
export * from "./segment.js";
export * from "./renderer.js";
export * from "./app.js";
