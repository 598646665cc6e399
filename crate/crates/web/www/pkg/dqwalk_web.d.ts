/* tslint:disable */
/* eslint-disable */

export function classicalDistribution(n: number, t: number): Float64Array;

export function distributionGrid(t: number, n_min: number, n_max: number, quantum_mode: boolean): Float64Array;

export function distributionStats(probabilities: Float64Array): Float64Array;

/**
 * `[lo, hi]`.
 */
export function intervalBounds(n: number, t: number): Float64Array;

export function quantumDistribution(n: number, t: number, loop_length: number): Float64Array;

export function randomPairingDistribution(n: number, t: number, seed: number, loop_length: number): Float64Array;

export function speedCurve(t: number, n_max: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly classicalDistribution: (a: number, b: number) => [number, number, number, number];
    readonly distributionGrid: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly distributionStats: (a: number, b: number) => [number, number, number, number];
    readonly intervalBounds: (a: number, b: number) => [number, number, number, number];
    readonly quantumDistribution: (a: number, b: number, c: number) => [number, number, number, number];
    readonly randomPairingDistribution: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly speedCurve: (a: number, b: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
