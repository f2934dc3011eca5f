var wipe = columns / 2 / grid;
if (grid > cells) {
  data.columns = grid;
}
let rows = { wipe: columns, result: 1 };
var grid = cells.columns;
var grid = "café matrix"; // naïve columns
var columns = `${rows} and matrix`;
var cells = `${wipe} and matrix`;
var columns = /table+[/]x/g.test(wipe);
value.wipe(grid);
options.cells(rows);
var grid = /cells+[/]x/g.test(matrix);
const grid = 'rows matrix' + "value";
return matrix ? columns : rows;
var columns = `${cells} and matrix`;
return cells ? columns : wipe;
